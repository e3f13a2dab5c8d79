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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "qccnn/cli/app.hpp"
#include "qccnn/cli/csv.hpp"
#include "qccnn/cli/settings.hpp"
#include "qccnn/error.hpp"

namespace qccnn::cli {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "qccnn");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("qccnn_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

const std::vector<std::string> kTiny{"--dataset-size", "40", "--iterations", "4",
                                     "--eval-every",   "2",  "--seeds",      "2"};

std::vector<std::string> with(std::vector<std::string> head, const std::vector<std::string>& tail) {
  head.insert(head.end(), tail.begin(), tail.end());
  return head;
}

TEST(Settings, ParsesCommentsAndWhitespace) {
  std::istringstream in("# comment\n\n  iterations = 50 \nmodel=cnn\n");
  const Settings s = parse_settings(in);
  EXPECT_EQ(s.at("iterations"), "50");
  EXPECT_EQ(s.at("model"), "cnn");
}

TEST(Settings, RejectsUnknownKeysByName) {
  std::istringstream in("iterations = 5\nlearning_rate = 0.1\n");
  try {
    parse_settings(in);
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.field(), "learning_rate");
  }
}

TEST(Settings, RejectsMalformedAndDuplicate) {
  std::istringstream bad("iterations 5\n");
  EXPECT_THROW(parse_settings(bad), ConfigError);
  std::istringstream dup("lr = 0.1\nlr = 0.2\n");
  EXPECT_THROW(parse_settings(dup), ConfigError);
}

TEST(Settings, ApplyAndDescribeRoundTrip) {
  ExperimentConfig cfg;
  apply_settings({{"model", "cnn"}, {"arch", "two-layer"}, {"labels", "5"}, {"seed_list", "3,7"},
                  {"lr", "0.05"}, {"batch_size", "16"}},
                 cfg);
  EXPECT_EQ(cfg.model, Model::kCnn);
  EXPECT_EQ(cfg.seeds, (std::vector<std::uint64_t>{3, 7}));
  EXPECT_EQ(cfg.train.batch_size, 16u);
  ExperimentConfig again;
  apply_settings(describe(cfg), again);
  EXPECT_EQ(describe(again), describe(cfg));
}

TEST(Settings, BadValuesNameTheField) {
  ExperimentConfig cfg;
  try {
    apply_settings({{"eval_every", "0"}}, cfg);
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.field(), "eval_every");
  }
  EXPECT_THROW(apply_settings({{"labels", "3"}}, cfg), ConfigError);
  EXPECT_THROW(apply_settings({{"seeds", "2"}, {"seed_list", "1"}}, cfg), ConfigError);
}

TEST(Csv, SeventeenDigits) {
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
  EXPECT_EQ(std::stod(format_double(1.0 / 3.0)), 1.0 / 3.0);
}

TEST_F(CliTest, GenDataDefault) {
  const Outcome o = invoke({"gen-data", "--out", path("d.jsonl")});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_NE(o.out.find("S=8 L=16 O=4 T=8 I=6"), std::string::npos);
  EXPECT_EQ(lines_of(slurp(path("d.jsonl"))).size(), 1001u);
}

TEST_F(CliTest, GenDataLabelSubset) {
  const Outcome o = invoke({"gen-data", "--labels", "S,T", "--out", path("st.jsonl")});
  ASSERT_EQ(o.code, 0) << o.err;
  const Dataset ds = load_dataset(path("st.jsonl"));
  EXPECT_EQ(ds.class_names, (std::vector<std::string>{"S", "T"}));
  EXPECT_LT(ds.size(), 1000u);
}

TEST_F(CliTest, GenDataBadPath) {
  const Outcome o = invoke({"gen-data", "--out", "/dev/null/sub/d.jsonl"});
  EXPECT_EQ(o.code, kExitIo);
  EXPECT_NE(o.err.find("/dev/null"), std::string::npos);
}

TEST_F(CliTest, TrainWritesLongCsvAndSummary) {
  const Outcome o = invoke(with({"train", "--quiet", "--csv", path("m.csv"), "--summary", path("s.json")}, kTiny));
  ASSERT_EQ(o.code, 0) << o.err;
  const auto rows = lines_of(slurp(path("m.csv")));
  ASSERT_EQ(rows.size(), 1u + 2u * 2u + 2u);
  EXPECT_EQ(rows[0], "iteration,seed,train_loss,test_loss,test_accuracy");
  EXPECT_EQ(rows[1].substr(0, 4), "2,0,");
  EXPECT_EQ(rows[3].substr(0, 4), "2,1,");
  EXPECT_EQ(rows[6].substr(0, 7), "4,mean,");
  const std::string summary = slurp(path("s.json"));
  EXPECT_NE(summary.find("\"wall_seconds\""), std::string::npos);
  EXPECT_NE(summary.find("\"seed_list\": \"0,1\""), std::string::npos);
}

TEST_F(CliTest, TrainPrecedenceFlagsOverFileOverDefaults) {
  {
    std::ofstream cfg(path("c.conf"));
    cfg << "iterations = 6\nmodel = cnn\ndataset_size = 40\neval_every = 2\nseeds = 1\n";
  }
  const Outcome o = invoke({"train", "--quiet", "--config", path("c.conf"), "--iterations", "2",
                            "--csv", path("m.csv"), "--summary", path("s.json")});
  ASSERT_EQ(o.code, 0) << o.err;
  const std::string summary = slurp(path("s.json"));
  EXPECT_NE(summary.find("\"iterations\": \"2\""), std::string::npos);   // flag
  EXPECT_NE(summary.find("\"model\": \"cnn\""), std::string::npos);      // file
  EXPECT_NE(summary.find("\"lr\": \"0.01\""), std::string::npos);        // default
}

TEST_F(CliTest, TrainConfigErrors) {
  Outcome o = invoke({"train", "--iterations", "0"});
  EXPECT_EQ(o.code, kExitConfig);
  EXPECT_NE(o.err.find("iterations"), std::string::npos);
  {
    std::ofstream cfg(path("bad.conf"));
    cfg << "momentum = 0.5\n";
  }
  o = invoke({"train", "--config", path("bad.conf")});
  EXPECT_EQ(o.code, kExitConfig);
  EXPECT_NE(o.err.find("momentum"), std::string::npos);
  o = invoke({"train", "--config", path("missing.conf")});
  EXPECT_EQ(o.code, kExitIo);
  o = invoke({"train", "--bogus"});
  EXPECT_EQ(o.code, kExitConfig);
}

TEST_F(CliTest, TrainDivergenceExitCode) {
  const Outcome o = invoke({"train", "--quiet", "--model", "cnn", "--lr", "1e200", "--dataset-size", "40",
                            "--iterations", "5", "--seeds", "1", "--csv", path("m.csv"),
                            "--summary", path("s.json")});
  EXPECT_EQ(o.code, kExitRuntime);
  EXPECT_NE(o.err.find("non-finite"), std::string::npos);
}

TEST(Gradcheck, DefaultPasses) {
  const Outcome o = invoke({"gradcheck"});
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("PASS"), std::string::npos);
  EXPECT_NE(o.out.find("max |shift rule - central difference|"), std::string::npos);
}

TEST(Gradcheck, DepthZeroTriviallyPasses) {
  const Outcome o = invoke({"gradcheck", "--depth", "0"});
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("0 gradient components"), std::string::npos);
}

TEST(Gradcheck, InjectedWrongRulesFail) {
  // Quarter-turn shift with the half coefficient, and the half-turn shift.
  for (const char* shift : {"0.78539816339744828", "1.5707963267948966"}) {
    const Outcome o = invoke({"gradcheck", "--shift", shift, "--coef", "0.5"});
    EXPECT_EQ(o.code, kExitRuntime) << shift;
    EXPECT_NE(o.out.find("worst instance"), std::string::npos);
    EXPECT_NE(o.out.find("FAIL"), std::string::npos);
  }
}

TEST_F(CliTest, ReproSinglePanelReducedSeeds) {
  const Outcome o = invoke(with({"repro", "--quiet", "--panel", "a", "--out-dir", path("r")}, kTiny));
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_NE(o.out.find("reduced run with 2 seed(s)"), std::string::npos);
  EXPECT_TRUE(fs::exists(path("r/fig3a.csv")));
  EXPECT_FALSE(fs::exists(path("r/fig3b.csv")));
  EXPECT_FALSE(fs::exists(path("r/fig3c.csv")));
  EXPECT_TRUE(fs::exists(path("r/runs/qccnn_two-layer_2labels.csv")));
  EXPECT_FALSE(fs::exists(path("r/runs/qccnn_two-layer_5labels.csv")));
  const auto rows = lines_of(slurp(path("r/fig3a.csv")));
  EXPECT_EQ(rows[0], "model,arch,labels,n_seeds,iteration,test_accuracy");
  ASSERT_EQ(rows.size(), 1u + 4u * 2u);
  EXPECT_EQ(rows[1].substr(0, 22), "cnn,one-layer,2,2,2,0.");
  const std::string summary = slurp(path("r/summary.json"));
  EXPECT_NE(summary.find("\"reduced_seeds\": true"), std::string::npos);
  EXPECT_NE(summary.find("\"loss_comparisons\""), std::string::npos);
}

TEST_F(CliTest, ReproByteIdentical) {
  const auto args = with({"repro", "--quiet", "--panel", "b", "--panel", "d"}, kTiny);
  ASSERT_EQ(invoke(with(args, {"--out-dir", path("x")})).code, 0);
  ASSERT_EQ(invoke(with(args, {"--out-dir", path("y")})).code, 0);
  for (const char* f : {"fig3b.csv", "fig3d.csv", "runs/qccnn_one-layer_5labels.csv", "summary.json"}) {
    EXPECT_EQ(slurp(dir_ / "x" / f), slurp(dir_ / "y" / f)) << f;
  }
  const auto loss = lines_of(slurp(path("x/fig3d.csv")));
  EXPECT_EQ(loss[0], "model,arch,labels,n_seeds,iteration,train_loss,test_loss");
}

TEST_F(CliTest, ReproRejectsPanelFixedKeysAndBadPanels) {
  {
    std::ofstream cfg(path("c.conf"));
    cfg << "labels = 5\n";
  }
  EXPECT_EQ(invoke({"repro", "--config", path("c.conf")}).code, kExitConfig);
  EXPECT_EQ(invoke({"repro", "--panel", "e"}).code, kExitConfig);
  EXPECT_EQ(invoke({"repro", "--model", "cnn"}).code, kExitConfig);
}

TEST(Help, DocumentsOpenDefaults) {
  const Outcome o = invoke({"train", "--help"});
  EXPECT_EQ(o.code, 0);
  for (const char* needle : {"full-batch", "max pooling", "QCONV_THREADS", "seeds 0..9", "--eval-every"}) {
    EXPECT_NE(o.out.find(needle), std::string::npos) << needle;
  }
}

}  // namespace
}  // namespace qccnn::cli
