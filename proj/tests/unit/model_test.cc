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

#include "arabtok/model.h"

#include <filesystem>
#include <fstream>
#include <string>

#include <gtest/gtest.h>

#include "arabtok/file_util.h"
#include "arabtok/trainer.h"

namespace arabtok {
namespace {

namespace fs = std::filesystem;

TokenizerModel Trained(TokenizerKind kind) {
  std::vector<Document> docs = {
      {"1", "والكتاب الجديد يتحدثها الطلاب", std::nullopt},
      {"2", "كتب الطلاب الكتاب الجديد بالقلم", std::nullopt}};
  TrainOptions opts;
  opts.kind = kind;
  opts.vocab_size = 60;
  return Train(docs, opts);
}

fs::path TempPath(const std::string& name) {
  return fs::temp_directory_path() / ("arabtok_model_test_" + name);
}

TEST(MergedTokenTest, StripsContinuationOfRightSide) {
  EXPECT_EQ(MergedToken("a", "##b"), "ab");
  EXPECT_EQ(MergedToken("##a", "##b"), "##ab");
  EXPECT_EQ(MergedToken("و", "##+"), "و+");
}

TEST(KindTest, NamesRoundTrip) {
  for (TokenizerKind k : kAllKinds) EXPECT_EQ(ParseKind(KindName(k)), k);
  EXPECT_THROW(ParseKind("unigram"), std::invalid_argument);
}

TEST(SerializeTest, SaveLoadRoundTripAndStableBytes) {
  for (TokenizerKind kind : kAllKinds) {
    const TokenizerModel m = Trained(kind);
    const fs::path a = TempPath("a.json"), b = TempPath("b.json");
    SaveModel(m, a);
    const TokenizerModel back = LoadModel(a);
    EXPECT_EQ(back, m) << KindName(kind);
    SaveModel(back, b);
    EXPECT_EQ(ReadFile(a), ReadFile(b));
    fs::remove(a);
    fs::remove(b);
  }
}

TEST(SerializeTest, MissingMergesForBpeIsAnError) {
  const TokenizerModel m = Trained(TokenizerKind::kBpe);
  nlohmann::json j = nlohmann::json::parse(SerializeModel(m));
  j.erase("merges");
  j.erase("checksum");
  EXPECT_THROW(DeserializeModel(j.dump()), ModelFormatError);
}

TEST(SerializeTest, VersionMismatchAndTamperingAreErrors) {
  const TokenizerModel m = Trained(TokenizerKind::kWordLevel);
  nlohmann::json j = nlohmann::json::parse(SerializeModel(m));
  j["format_version"] = 99;
  EXPECT_THROW(DeserializeModel(j.dump()), ModelFormatError);
  j = nlohmann::json::parse(SerializeModel(m));
  j["vocab"].push_back("extra");
  EXPECT_THROW(DeserializeModel(j.dump()), ModelFormatError);
  EXPECT_THROW(DeserializeModel("{not json"), ModelFormatError);
}

TEST(ValidateTest, StructuralInvariants) {
  TokenizerModel m = Trained(TokenizerKind::kBpe);
  m.vocab[0] = "[UNK]";
  EXPECT_THROW(m.Validate(), ModelFormatError);
  m = Trained(TokenizerKind::kBpe);
  m.merges.emplace_back("zz", "##q");
  EXPECT_THROW(m.Validate(), ModelFormatError);
  m = Trained(TokenizerKind::kBpe);
  m.vocab.push_back(m.vocab[5]);
  EXPECT_THROW(m.Validate(), ModelFormatError);
  m = Trained(TokenizerKind::kBpeMorph);
  m.clitic_table.reset();
  EXPECT_THROW(m.Validate(), ModelFormatError);
}

TEST(ExportTest, VocabAndMergesText) {
  const TokenizerModel m = Trained(TokenizerKind::kBpe);
  const fs::path v = TempPath("vocab.txt"), g = TempPath("merges.txt");
  ExportVocabTxt(m, v);
  ExportMergesTxt(m, g);
  std::ifstream vin(v);
  std::string line;
  std::size_t n = 0;
  while (std::getline(vin, line)) {
    EXPECT_EQ(line, m.vocab[n]);
    ++n;
  }
  EXPECT_EQ(n, m.vocab.size());
  std::ifstream gin(g);
  std::getline(gin, line);
  EXPECT_EQ(line, m.merges[0].first + " " + m.merges[0].second);
  fs::remove(v);
  fs::remove(g);
}

TEST(FileUtilTest, AtomicWriteLeavesNoTempFile) {
  const fs::path dir = TempPath("atomic_dir");
  fs::create_directories(dir);
  WriteFileAtomic(dir / "x.txt", "hello");
  EXPECT_EQ(ReadFile(dir / "x.txt"), "hello");
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(dir)) {
    (void)e;
    ++files;
  }
  EXPECT_EQ(files, 1u);
  EXPECT_ANY_THROW(WriteFileAtomic(dir / "missing" / "x.txt", "y"));
  fs::remove_all(dir);
}

}  // namespace
}  // namespace arabtok
