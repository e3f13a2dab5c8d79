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

#include "qccnn/cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "qccnn/cli/csv.hpp"
#include "qccnn/cli/settings.hpp"
#include "qccnn/error.hpp"
#include "qccnn/random.hpp"
#include "qccnn/tetris.hpp"

namespace qccnn::cli {
namespace {

using nlohmann::json;

void write_file(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) throw IoError("cannot create directory '" + path.parent_path().string() + "': " + ec.message());
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << content;
  out.close();
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

json record_json(const MetricsRecord& r) {
  return {{"iteration", r.iteration},
          {"train_loss", r.train_loss},
          {"test_loss", r.test_loss},
          {"test_accuracy", r.test_accuracy}};
}

json settings_json(const Settings& s) {
  json out = json::object();
  for (const auto& [k, v] : s) out[k] = v;
  return out;
}

json result_json(const ExperimentResult& result) {
  json seeds = json::array();
  for (const SeedResult& run : result.runs) {
    seeds.push_back({{"seed", run.seed},
                     {"train_size", run.train_size},
                     {"test_size", run.test_size},
                     {"final", run.metrics.empty() ? json() : record_json(run.metrics.back())}});
  }
  return {{"model", to_string(result.config.model)},
          {"arch", to_string(result.config.arch)},
          {"labels", result.config.labels},
          {"n_seeds", result.runs.size()},
          {"final", result.mean.empty() ? json() : record_json(result.mean.back())},
          {"per_seed", seeds}};
}

std::string run_name(const ExperimentConfig& c) {
  return to_string(c.model) + "_" + to_string(c.arch) + "_" + std::to_string(c.labels) + "labels";
}

ProgressCallback seed_logger(const ExperimentConfig& config, bool quiet, std::ostream& log) {
  if (quiet) return {};
  const std::string name = to_string(config.model) + " " + to_string(config.arch) + " " +
                           std::to_string(config.labels) + " labels";
  const std::size_t last = config.train.iterations - config.train.iterations % config.train.eval_every;
  return [&log, name, last](std::uint64_t seed, const MetricsRecord& r) {
    if (r.iteration != last) return;
    log << "[" << name << "] seed " << seed << ": test_accuracy " << format_double(r.test_accuracy)
        << ", test_loss " << format_double(r.test_loss) << '\n';
    log.flush();
  };
}

}  // namespace

void gen_data(const GenDataOptions& options, std::ostream& out) {
  if (options.count < 1) throw ConfigError("count", "must be at least 1");
  Dataset ds = generate_dataset(options.count, options.seed);
  if (!options.labels.empty()) ds = filter_labels(ds, options.labels);
  std::ostringstream buf;
  write_dataset(ds, buf);
  write_file(options.out, buf.str());

  out << "configurations:";
  for (std::string_view name : kBrickNames) {
    out << ' ' << name << '=' << enumerate_configurations(name).size();
  }
  out << "\nsamples:";
  const auto counts = ds.label_counts();
  for (std::size_t i = 0; i < ds.class_names.size(); ++i) {
    out << ' ' << ds.class_names[i] << '=' << counts[i];
  }
  out << "\nwrote " << ds.size() << " samples to " << options.out.string() << '\n';
}

ExperimentResult train_command(const TrainOptions& options, std::ostream& out, std::ostream& log) {
  options.config.validate();
  const auto start = std::chrono::steady_clock::now();
  ExperimentResult result =
      run_experiment(options.config, seed_logger(options.config, options.quiet, log));
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::ostringstream csv;
  write_metrics_csv(result, csv);
  write_file(options.csv, csv.str());

  json summary = result_json(result);
  summary["config"] = settings_json(describe(options.config));
  summary["wall_seconds"] = seconds;
  summary["csv"] = options.csv.string();
  write_file(options.summary, summary.dump(2) + "\n");

  const MetricsRecord& last = result.mean.back();
  out << run_name(options.config) << ": iteration " << last.iteration << ", mean test_accuracy "
      << format_double(last.test_accuracy) << ", mean test_loss " << format_double(last.test_loss)
      << " over " << result.runs.size() << " seeds\n";
  return result;
}

GradcheckReport gradcheck(const GradcheckOptions& options) {
  if (options.qubits.empty()) throw ConfigError("qubits", "at least one qubit count is required");
  if (!options.depth && options.max_depth < 1) throw ConfigError("max-depth", "must be at least 1");
  if (!(options.step > 0.0)) throw ConfigError("step", "must be positive");
  Rng rng(options.seed);
  GradcheckReport report;
  report.cases = options.cases;
  for (std::size_t c = 0; c < options.cases; ++c) {
    const std::size_t n = options.qubits[c % options.qubits.size()];
    const std::size_t depth =
        options.depth ? *options.depth : 1 + (c / options.qubits.size()) % options.max_depth;
    const CircuitSpec spec = build_circuit(n, depth);
    std::vector<double> params(spec.param_count());
    for (double& p : params) p = rng.uniform(0.0, 2.0 * std::numbers::pi);
    std::vector<double> window(n);
    for (double& w : window) w = rng.uniform(0.0, 1.0);

    const std::vector<double> grad = param_shift_grad(spec, params, window, options.rule);
    for (std::size_t j = 0; j < params.size(); ++j) {
      std::vector<double> shifted = params;
      shifted[j] = params[j] + options.step;
      const double up = quantum_feature(spec, shifted, window);
      shifted[j] = params[j] - options.step;
      const double down = quantum_feature(spec, shifted, window);
      const double numeric = (up - down) / (2.0 * options.step);
      const double deviation = std::abs(grad[j] - numeric);
      ++report.components;
      if (report.components == 1 || deviation > report.max_deviation || std::isnan(deviation)) {
        report.max_deviation = deviation;
        report.worst_case = c;
        report.worst_qubits = n;
        report.worst_depth = depth;
        report.worst_param = j;
        report.worst_analytic = grad[j];
        report.worst_numeric = numeric;
      }
    }
  }
  report.passed = !(report.max_deviation > options.tolerance) && !std::isnan(report.max_deviation);
  return report;
}

void print_gradcheck(const GradcheckReport& report, const GradcheckOptions& options,
                     std::ostream& out) {
  out << "gradcheck: " << report.cases << " circuits, " << report.components
      << " gradient components, shift " << (options.rule.shift) << ", coefficient "
      << (options.rule.coefficient) << '\n';
  out << "max |shift rule - central difference| = " << (report.max_deviation)
      << " (tolerance " << (options.tolerance) << ")\n";
  if (report.components > 0 && !report.passed) {
    out << "worst instance: case " << report.worst_case << ", qubits " << report.worst_qubits
        << ", depth " << report.worst_depth << ", param " << report.worst_param << ", analytic "
        << (report.worst_analytic) << ", numeric "
        << (report.worst_numeric) << '\n';
  }
  out << (report.passed ? "PASS" : "FAIL") << '\n';
}

ReproResult repro(const ReproOptions& options, std::ostream& out, std::ostream& log) {
  std::vector<char> panels = options.panels;
  for (char p : panels) {
    if (p < 'a' || p > 'd') throw ConfigError("panel", std::string("unknown panel '") + p + "'");
  }
  std::sort(panels.begin(), panels.end());
  panels.erase(std::unique(panels.begin(), panels.end()), panels.end());
  const auto wants = [&](char p) { return std::find(panels.begin(), panels.end(), p) != panels.end(); };
  options.base.validate();

  std::vector<std::size_t> label_sets;
  if (wants('a') || wants('c')) label_sets.push_back(2);
  if (wants('b') || wants('d')) label_sets.push_back(5);

  ReproResult result;
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t labels : label_sets) {
    for (Model model : {Model::kCnn, Model::kQccnn}) {
      for (Architecture arch : {Architecture::kOneLayer, Architecture::kTwoLayer}) {
        ExperimentConfig cfg = options.base;
        cfg.model = model;
        cfg.arch = arch;
        cfg.labels = labels;
        ExperimentResult r = run_experiment(cfg, seed_logger(cfg, options.quiet, log));
        std::ostringstream csv;
        write_metrics_csv(r, csv);
        const auto path = options.out_dir / "runs" / (run_name(cfg) + ".csv");
        write_file(path, csv.str());
        result.files.push_back(path);
        result.experiments.push_back(std::move(r));
      }
    }
  }

  const auto find = [&](Model m, Architecture a, std::size_t labels) -> const ExperimentResult& {
    for (const ExperimentResult& r : result.experiments) {
      if (r.config.model == m && r.config.arch == a && r.config.labels == labels) return r;
    }
    throw StateError("missing experiment");
  };

  for (char panel : panels) {
    const std::size_t labels = (panel == 'a' || panel == 'c') ? 2 : 5;
    const PanelMetric metric = (panel == 'a' || panel == 'b') ? PanelMetric::kAccuracy : PanelMetric::kLoss;
    std::ostringstream csv;
    write_panel_header(metric, csv);
    for (const ExperimentResult& r : result.experiments) {
      if (r.config.labels == labels) write_panel_rows(metric, r, csv);
    }
    const auto path = options.out_dir / (std::string("fig3") + panel + ".csv");
    write_file(path, csv.str());
    result.files.push_back(path);
  }

  for (std::size_t labels : label_sets) {
    for (Architecture arch : {Architecture::kOneLayer, Architecture::kTwoLayer}) {
      const ExperimentResult& q = find(Model::kQccnn, arch, labels);
      const ExperimentResult& c = find(Model::kCnn, arch, labels);
      LossComparison cmp;
      cmp.labels = labels;
      cmp.arch = arch;
      cmp.qccnn_test_loss = q.mean.back().test_loss;
      cmp.cnn_test_loss = c.mean.back().test_loss;
      cmp.holds = cmp.qccnn_test_loss < cmp.cnn_test_loss;
      for (std::size_t s = 0; s < q.runs.size(); ++s) {
        if (!(q.runs[s].metrics.back().test_loss < c.runs[s].metrics.back().test_loss)) {
          cmp.discrepant_seeds.push_back(q.runs[s].seed);
        }
      }
      result.comparisons.push_back(cmp);
    }
  }

  const std::size_t n_seeds = options.base.seeds.size();
  json summary;
  summary["n_seeds"] = n_seeds;
  summary["reduced_seeds"] = n_seeds < default_seeds().size();
  summary["panels"] = std::string(panels.begin(), panels.end());
  summary["config"] = settings_json(describe(options.base));
  summary["experiments"] = json::array();
  for (const ExperimentResult& r : result.experiments) summary["experiments"].push_back(result_json(r));
  summary["loss_comparisons"] = json::array();
  for (const LossComparison& cmp : result.comparisons) {
    summary["loss_comparisons"].push_back({{"labels", cmp.labels},
                                           {"arch", to_string(cmp.arch)},
                                           {"qccnn_test_loss", cmp.qccnn_test_loss},
                                           {"cnn_test_loss", cmp.cnn_test_loss},
                                           {"qccnn_lower", cmp.holds},
                                           {"discrepant_seeds", cmp.discrepant_seeds}});
  }
  const auto summary_path = options.out_dir / "summary.json";
  write_file(summary_path, summary.dump(2) + "\n");
  result.files.push_back(summary_path);

  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (n_seeds < default_seeds().size()) {
    out << "NOTE: reduced run with " << n_seeds << " seed(s); the reference setting uses "
        << default_seeds().size() << '\n';
  }
  for (const ExperimentResult& r : result.experiments) {
    out << run_name(r.config) << ": mean test_accuracy " << format_double(r.mean.back().test_accuracy)
        << ", mean test_loss " << format_double(r.mean.back().test_loss) << '\n';
  }
  for (const LossComparison& cmp : result.comparisons) {
    out << cmp.labels << " labels, " << to_string(cmp.arch) << ": qccnn test_loss "
        << format_double(cmp.qccnn_test_loss) << (cmp.holds ? " < " : " >= ") << "cnn "
        << format_double(cmp.cnn_test_loss) << '\n';
    if (!cmp.discrepant_seeds.empty()) {
      out << "  reproduction discrepancy: qccnn loss not below cnn for seed(s)";
      for (std::uint64_t s : cmp.discrepant_seeds) out << ' ' << s;
      out << '\n';
    }
  }
  out << "wrote " << result.files.size() << " files to " << options.out_dir.string() << " in "
      << static_cast<long long>(std::lround(seconds)) << " s\n";
  return result;
}

}  // namespace qccnn::cli
