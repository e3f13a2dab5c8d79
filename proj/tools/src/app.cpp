// Copyright 2026 The QCCNN Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qccnn/cli/app.hpp"

#include <map>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>

#include "qccnn/cli/commands.hpp"
#include "qccnn/cli/settings.hpp"
#include "qccnn/error.hpp"

namespace qccnn::cli {
namespace {

constexpr const char* kFooter =
    "Defaults the reference setup leaves open: full-batch ADAM (beta1 0.9, beta2 0.999, eps 1e-8),\n"
    "max pooling 2x2 stride 1, Ry(a) = [[cos a, -sin a], [sin a, cos a]] with exact shift pi/4,\n"
    "labels drawn uniformly, seeds 0..9, metrics every 10 iterations, train_loss measured before\n"
    "each update and test metrics after it. QCONV_THREADS caps worker threads (0 or unset = all cores).";

struct FlagSpec {
  std::string_view key;
  const char* flag;
  const char* help;
};

constexpr FlagSpec kExperimentFlags[] = {
    {"model", "--model", "qccnn | cnn (default qccnn)"},
    {"arch", "--arch", "one-layer | two-layer (default one-layer)"},
    {"labels", "--labels", "2 (S, T) | 5 (default 2)"},
    {"dataset_size", "--dataset-size", "images generated per seed before the split (default 1000)"},
    {"train_fraction", "--train-fraction", "training share of the split (default 0.8)"},
    {"depth", "--depth", "quantum circuit depth (default 4)"},
    {"seeds", "--seeds", "number of seeds, run as 0..n-1 (default 10)"},
    {"seed_list", "--seed-list", "explicit comma-separated seeds"},
    {"iterations", "--iterations", "ADAM iterations (default 1000)"},
    {"lr", "--lr", "learning rate (default 0.01)"},
    {"beta1", "--beta1", "ADAM beta1 (default 0.9)"},
    {"beta2", "--beta2", "ADAM beta2 (default 0.999)"},
    {"epsilon", "--epsilon", "ADAM epsilon (default 1e-8)"},
    {"batch_size", "--batch-size", "mini-batch size; 0 = full batch (default 0)"},
    {"eval_every", "--eval-every", "iterations between metric records (default 10)"},
};

// Flags override the config file, which overrides the built-in defaults.
struct ExperimentFlags {
  std::string config_path;
  std::map<std::string, std::string> values;
  std::vector<std::pair<std::string, CLI::Option*>> options;

  void attach(CLI::App& app, std::initializer_list<std::string_view> skip = {}) {
    app.add_option("--config", config_path, "flat key = value settings file");
    for (const FlagSpec& f : kExperimentFlags) {
      if (std::find(skip.begin(), skip.end(), f.key) != skip.end()) continue;
      options.emplace_back(std::string(f.key), app.add_option(f.flag, values[std::string(f.key)], f.help));
    }
  }

  ExperimentConfig resolve(std::initializer_list<std::string_view> forbidden = {}) const {
    Settings settings;
    if (!config_path.empty()) settings = load_settings(config_path);
    for (std::string_view key : forbidden) {
      if (settings.contains(std::string(key))) {
        throw ConfigError(std::string(key), "is fixed by the selected panels");
      }
    }
    Settings flags;
    for (const auto& [key, opt] : options) {
      if (opt->count() > 0) flags[key] = values.at(key);
    }
    // A flag choosing one seed form replaces the other form from the file.
    if (flags.contains("seeds")) settings.erase("seed_list");
    if (flags.contains("seed_list")) settings.erase("seeds");
    ExperimentConfig config;
    apply_settings(overlay(settings, flags), config);
    return config;
  }
};

std::vector<std::string> split_names(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hybrid quantum-classical convolutional network experiments", "qccnn"};
  app.require_subcommand(1);
  app.footer(kFooter);

  GenDataOptions gen;
  std::string gen_labels;
  auto* gen_cmd = app.add_subcommand("gen-data", "write a Tetris dataset as JSON lines");
  gen_cmd->add_option("--count", gen.count, "number of images")->capture_default_str();
  gen_cmd->add_option("--seed", gen.seed, "generator seed")->capture_default_str();
  gen_cmd->add_option("--labels", gen_labels, "comma-separated class subset, e.g. S,T (default all)");
  gen_cmd->add_option("--out", gen.out, "output path")->capture_default_str();

  TrainOptions train;
  ExperimentFlags train_flags;
  auto* train_cmd = app.add_subcommand("train", "train one model over several seeds");
  train_flags.attach(*train_cmd);
  train_cmd->add_option("--csv", train.csv, "metrics CSV path")->capture_default_str();
  train_cmd->add_option("--summary", train.summary, "summary JSON path")->capture_default_str();
  train_cmd->add_flag("--quiet", train.quiet, "suppress per-seed progress");

  GradcheckOptions grad;
  std::size_t grad_depth = 0;
  auto* grad_cmd = app.add_subcommand("gradcheck", "verify shift-rule gradients against finite differences");
  grad_cmd->add_option("--cases", grad.cases, "random circuits")->capture_default_str();
  grad_cmd->add_option("--qubits", grad.qubits, "qubit counts cycled over cases")->capture_default_str();
  auto* depth_opt = grad_cmd->add_option("--depth", grad_depth, "fixed depth (default cycles 1..4)");
  grad_cmd->add_option("--seed", grad.seed, "parameter seed")->capture_default_str();
  grad_cmd->add_option("--shift", grad.rule.shift, "shift s in c * (f(a+s) - f(a-s)) (default pi/4)");
  grad_cmd->add_option("--coef", grad.rule.coefficient, "coefficient c (default 1)");
  grad_cmd->add_option("--step", grad.step, "central-difference step")->capture_default_str();
  grad_cmd->add_option("--tolerance", grad.tolerance, "pass threshold")->capture_default_str();

  ReproOptions rep;
  ExperimentFlags rep_flags;
  std::vector<std::string> rep_panels;
  auto* rep_cmd = app.add_subcommand("repro", "run every model/architecture/label combination and write panel CSVs");
  rep_flags.attach(*rep_cmd, {"model", "arch", "labels"});
  rep_cmd->add_option("--panel", rep_panels, "a | b | c | d, repeatable (default all)");
  rep_cmd->add_option("--out-dir", rep.out_dir, "output directory")->capture_default_str();
  rep_cmd->add_flag("--quiet", rep.quiet, "suppress per-seed progress");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*gen_cmd) {
      gen.labels = split_names(gen_labels);
      gen_data(gen, out);
    } else if (*train_cmd) {
      train.config = train_flags.resolve();
      train_command(train, out, err);
    } else if (*grad_cmd) {
      if (depth_opt->count() > 0) grad.depth = grad_depth;
      const GradcheckReport report = gradcheck(grad);
      print_gradcheck(report, grad, out);
      return report.passed ? kExitOk : kExitRuntime;
    } else if (*rep_cmd) {
      rep.base = rep_flags.resolve({"model", "arch", "labels"});
      if (!rep_panels.empty()) {
        rep.panels.clear();
        for (const std::string& p : rep_panels) {
          if (p.size() != 1) throw ConfigError("panel", "expected a, b, c or d, got '" + p + "'");
          rep.panels.push_back(p[0]);
        }
      }
      repro(rep, out, err);
    }
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitOk;
}

}  // namespace qccnn::cli
