// Copyright 2026 The arabtok Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "arabtok/cli.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "arabtok/file_util.h"
#include "arabtok/synth.h"
#include "json.hpp"

namespace arabtok {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result RunCli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::Run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("arabtok_cli_" + std::string(::testing::UnitTest::GetInstance()
                                             ->current_test_info()
                                             ->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    SynthConfig c;
    c.target_bytes = 150 * 1024;
    c.roots = 150;
    std::ofstream raw(Path("raw.jsonl"));
    WriteSynthJsonl(c, raw);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, PreprocessTrainEncodeDecode) {
  Result r = RunCli({"preprocess", "--input", Path("raw.jsonl"), "--output",
                     Path("clean.jsonl"), "--max-mean-line-words", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto summary = nlohmann::json::parse(r.out);
  EXPECT_GT(summary["kept"].get<int>(), 0);
  EXPECT_LT(summary["kept"].get<int>(), summary["read"].get<int>());

  r = RunCli({"train", "--corpus", Path("clean.jsonl"), "--kind", "bpe_morph",
              "--vocab", "800", "--output", Path("m.json"), "--export-dir",
              Path("export")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(fs::exists(Path("export/vocab.txt")));
  EXPECT_TRUE(fs::exists(Path("export/merges.txt")));

  r = RunCli({"encode", "--model", Path("m.json"), "--text", "يتحدثها",
              "--out-format", "tokens"});
  ASSERT_EQ(r.code, 0) << r.err;
  // The enclitic is its own piece; the stem may be split further.
  EXPECT_NE(r.out.find("+ها"), std::string::npos) << r.out;

  r = RunCli({"encode", "--model", Path("m.json"), "--text",
              "<b>والكتاب</b> الجديد", "--out-format", "ids"});
  ASSERT_EQ(r.code, 0);
  const std::string ids = r.out.substr(0, r.out.find('\n'));
  r = RunCli({"decode", "--model", Path("m.json"), "--ids", ids});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "والكتاب الجديد\n");
}

TEST_F(CliTest, EncodeFileThenDecodeFile) {
  ASSERT_EQ(RunCli({"train", "--corpus", Path("raw.jsonl"), "--vocab", "500",
                    "--output", Path("m.json")})
                .code,
            0);
  {
    std::ofstream in(Path("lines.txt"));
    in << "كتاب جديد\nوالقلم  على الطاولة\n";
  }
  Result r = RunCli({"encode", "--model", Path("m.json"), "--input",
                     Path("lines.txt"), "--output", Path("enc.jsonl")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["lines"], 2);
  r = RunCli({"decode", "--model", Path("m.json"), "--input", Path("enc.jsonl")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "كتاب جديد\nوالقلم على الطاولة\n");
}

TEST_F(CliTest, CompareAndEvalAreByteStable) {
  const std::vector<std::string> args = {
      "compare", "--corpus", Path("raw.jsonl"), "--sizes", "300,600",
      "--output", Path("a.csv"), "--json", Path("a.json"), "--long",
      Path("a_long.csv"), "--no-timing"};
  Result r = RunCli(args);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["rows"], 8);
  std::vector<std::string> again = args;
  again[6] = Path("b.csv");
  ASSERT_EQ(RunCli(again).code, 0);
  EXPECT_EQ(ReadFile(Path("a.csv")), ReadFile(Path("b.csv")));

  ASSERT_EQ(RunCli({"train", "--corpus", Path("raw.jsonl"), "--kind",
                    "wordlevel", "--vocab", "300", "--output", Path("w.json")})
                .code,
            0);
  r = RunCli({"eval", "--model", Path("w.json"), "--corpus", Path("raw.jsonl"),
              "--sample", "20", "--output", Path("eval.json"), "--no-timing"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto line = nlohmann::json::parse(r.out);
  EXPECT_DOUBLE_EQ(line["token_to_word"].get<double>(), 1.0);
  EXPECT_EQ(line["roundtrip_checked"], 20);
}

TEST_F(CliTest, ConfigFileSuppliesDefaultsAndFlagsWin) {
  {
    std::ofstream cfg(Path("cfg.json"));
    cfg << R"({"kind": "wordlevel", "vocab": 50, "normalizer": {"map_digits": false}})";
  }
  ASSERT_EQ(RunCli({"train", "--config", Path("cfg.json"), "--corpus",
                    Path("raw.jsonl"), "--output", Path("a.json")})
                .code,
            0);
  const auto a = nlohmann::json::parse(ReadFile(Path("a.json")));
  EXPECT_EQ(a["kind"], "wordlevel");
  EXPECT_EQ(a["vocab"].size(), 50u);
  EXPECT_EQ(a["normalizer"]["map_digits"], false);

  ASSERT_EQ(RunCli({"train", "--config", Path("cfg.json"), "--corpus",
                    Path("raw.jsonl"), "--output", Path("b.json"), "--vocab",
                    "60"})
                .code,
            0);
  EXPECT_EQ(nlohmann::json::parse(ReadFile(Path("b.json")))["vocab"].size(), 60u);

  {
    std::ofstream cfg(Path("bad.json"));
    cfg << R"({"no_such_flag": 1})";
  }
  EXPECT_EQ(RunCli({"train", "--config", Path("bad.json"), "--corpus",
                    Path("raw.jsonl"), "--output", Path("c.json")})
                .code,
            1);
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(RunCli({}).code, 1);
  EXPECT_EQ(RunCli({"frobnicate"}).code, 1);
  EXPECT_EQ(RunCli({"train", "--corpus", Path("raw.jsonl"), "--bogus"}).code, 1);
  EXPECT_EQ(RunCli({"train", "--corpus", Path("raw.jsonl")}).code, 1);
  EXPECT_EQ(RunCli({"train", "--corpus", Path("missing.jsonl"), "--output",
                    Path("m.json")})
                .code,
            2);
  EXPECT_FALSE(fs::exists(Path("m.json")));
  EXPECT_EQ(RunCli({"train", "--corpus", Path("raw.jsonl"), "--vocab", "3",
                    "--output", Path("m.json")})
                .code,
            2);
  EXPECT_FALSE(fs::exists(Path("m.json")));
}

TEST_F(CliTest, HelpListsFlagsWithDefaults) {
  for (const char* cmd : {"preprocess", "train", "encode", "decode", "eval",
                          "compare", "dump-clitics"}) {
    const Result r = RunCli({cmd, "--help"});
    EXPECT_EQ(r.code, 0) << cmd;
    EXPECT_NE(r.out.find("--config"), std::string::npos) << cmd;
  }
  const Result train = RunCli({"train", "--help"});
  EXPECT_NE(train.out.find("16000"), std::string::npos);
  EXPECT_NE(train.out.find("--threads"), std::string::npos);
}

TEST_F(CliTest, DumpCliticsIsLoadable) {
  const Result r = RunCli({"dump-clitics", "--output", Path("t.json")});
  ASSERT_EQ(r.code, 0);
  ASSERT_EQ(RunCli({"train", "--corpus", Path("raw.jsonl"), "--kind",
                    "bpe_morph", "--vocab", "300", "--clitics", Path("t.json"),
                    "--output", Path("m.json")})
                .code,
            0);
}

}  // namespace
}  // namespace arabtok
