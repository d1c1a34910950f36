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

#include "arabtok/trainer.h"

#include <map>
#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "../oracle.h"
#include "arabtok/tokenizer.h"

namespace arabtok {
namespace {

using PT = std::vector<PreToken>;
using testing::OracleObjective;
using testing::OracleTrain;

std::vector<Document> Docs(std::initializer_list<const char*> texts) {
  std::vector<Document> docs;
  for (const char* t : texts) {
    docs.push_back({std::to_string(docs.size()), t, std::nullopt});
  }
  return docs;
}

std::size_t AlphabetSize(const std::vector<PreToken>& pretokens) {
  std::set<std::string> symbols;
  for (const PreToken& p : pretokens) {
    for (const std::string& s : testing::OracleSymbols(p.surface)) symbols.insert(s);
  }
  return symbols.size();
}

TEST(CountPreTokensTest, Examples) {
  const NormalizerConfig n;
  const CliticTable t = CliticTable::Default();
  EXPECT_EQ(CountPreTokens(Docs({"كتاب كتاب"}), TokenizerKind::kBpe, n, t),
            (std::vector<PreToken>{{"كتاب", 2}}));
  EXPECT_EQ(CountPreTokens(Docs({"يتحدثها"}), TokenizerKind::kBpeMorph, n, t),
            (std::vector<PreToken>{{"+ها", 1}, {"يتحدث", 1}}));
  EXPECT_TRUE(CountPreTokens({}, TokenizerKind::kBpe, n, t).empty());
}

TEST(CountPreTokensTest, ThreadCountDoesNotChangeCounts) {
  std::vector<Document> docs;
  for (int i = 0; i < 50; ++i) {
    docs.push_back({std::to_string(i), "كتب كتاب " + std::to_string(i % 7) +
                                           " والكتاب مكتبة",
                    std::nullopt});
  }
  const auto one = CountPreTokens(docs, TokenizerKind::kBpe, {}, {}, 1);
  EXPECT_EQ(CountPreTokens(docs, TokenizerKind::kBpe, {}, {}, 3), one);
  EXPECT_EQ(CountPreTokens(docs, TokenizerKind::kBpe, {}, {}, 8), one);
}

TEST(TrainBpeTest, FirstMergeOfRepeatedWord) {
  const std::vector<PreToken> p = {{"abab", 5}};
  // Symbols a ##b ##a ##b: (a,##b), (##b,##a) and (##a,##b) each occur 5
  // times, so the lexicographic tie-break decides.
  const TokenizerModel m = TrainBpe(p, kNumSpecials + 3 + 1);
  ASSERT_EQ(m.merges.size(), 1u);
  EXPECT_EQ(m.merges[0], (std::pair<std::string, std::string>{"a", "##b"}));
  EXPECT_EQ(m.vocab.back(), "ab");
}

TEST(TrainBpeTest, BudgetOfAlphabetGivesCharacterVocabulary) {
  const std::vector<PreToken> p = {{"low", 5}, {"lower", 2}};
  const std::size_t v = kNumSpecials + AlphabetSize(p);
  const TokenizerModel m = TrainBpe(p, v);
  EXPECT_TRUE(m.merges.empty());
  EXPECT_EQ(m.vocab.size(), v);
  EXPECT_EQ(m.vocab[0], "[PAD]");
  EXPECT_EQ(m.vocab[4], "[MASK]");
}

TEST(TrainBpeTest, ClassicCorpusMatchesOracle) {
  const std::vector<PreToken> p = {
      {"low", 5}, {"lower", 2}, {"newest", 6}, {"widest", 3}};
  const std::size_t v = kNumSpecials + AlphabetSize(p) + 10;
  const TokenizerModel m = TrainBpe(p, v);
  const auto oracle = OracleTrain(p, v, OracleObjective::kFrequency);
  EXPECT_EQ(m.merges.size(), 10u);
  EXPECT_EQ(m.merges, oracle.merges);
  EXPECT_EQ(m.vocab, oracle.vocab);
}

TEST(TrainBpeTest, StopsWhenNoPairRepeats) {
  const std::vector<PreToken> p = {{"ab", 1}, {"cd", 1}};
  const TokenizerModel m = TrainBpe(p, 100);
  EXPECT_TRUE(m.merges.empty());
  EXPECT_EQ(m.vocab.size(), kNumSpecials + 4);
}

TEST(TrainBpeTest, ErrorsAndTruncation) {
  const std::vector<PreToken> p = {{"abc", 3}, {"d", 1}};
  EXPECT_THROW(TrainBpe(p, kNumSpecials), TrainingError);
  EXPECT_THROW(TrainBpe({}, 100), TrainingError);
  TrainStats stats;
  const TokenizerModel m = TrainBpe(p, kNumSpecials + 2, &stats);
  EXPECT_EQ(stats.truncated_symbols, 2u);
  EXPECT_FALSE(stats.warnings.empty());
  // The most frequent symbols survive; "d" (count 1) is among the dropped.
  EXPECT_EQ(m.vocab.size(), kNumSpecials + 2);
  const Tokenizer tok(m);
  EXPECT_FALSE(tok.Find("d").has_value());
  EXPECT_EQ(tok.Encode("d").ids, (std::vector<TokenId>{kUnkId}));
}

std::vector<PreToken> RandomPreTokens(std::mt19937_64& rng, std::size_t n,
                                      std::string_view alphabet_u8) {
  const std::vector<std::string> chars = unicode::SplitChars(alphabet_u8);
  std::map<std::string, std::uint64_t> words;
  while (words.size() < n) {
    std::string w;
    const std::size_t len = 1 + rng() % 7;
    for (std::size_t i = 0; i < len; ++i) w += chars[rng() % chars.size()];
    words[w] += 1 + rng() % 9;
  }
  std::vector<PreToken> out;
  for (auto& [s, c] : words) out.push_back({s, c});
  return out;
}

TEST(TrainBpeTest, RandomTinyCorporaMatchOracle) {
  std::mt19937_64 rng(20240611);
  for (int round = 0; round < 40; ++round) {
    const auto p = RandomPreTokens(rng, 1 + rng() % 50,
                                   round % 2 ? "abcd" : "كتبسلم");
    const std::size_t v = kNumSpecials + AlphabetSize(p) + rng() % 40;
    const TokenizerModel m = TrainBpe(p, v);
    const auto oracle = OracleTrain(p, v, OracleObjective::kFrequency);
    ASSERT_EQ(m.merges, oracle.merges) << "round " << round;
    ASSERT_EQ(m.vocab, oracle.vocab) << "round " << round;
  }
}

TEST(TrainBpeTest, SmallerBudgetIsPrefix) {
  std::mt19937_64 rng(3);
  const auto p = RandomPreTokens(rng, 50, "abcde");
  const std::size_t base = kNumSpecials + AlphabetSize(p);
  const TokenizerModel small = TrainBpe(p, base + 8);
  const TokenizerModel large = TrainBpe(p, base + 30);
  ASSERT_LE(small.merges.size(), large.merges.size());
  EXPECT_TRUE(std::equal(small.merges.begin(), small.merges.end(),
                         large.merges.begin()));
}

TEST(TrainWordPieceTest, ScorePrefersRarePartners) {
  // Pair (x,##y): count 4 with unigram counts 4 and 4, score 0.25.
  // Pair (a,##b): count 6 with unigram counts 100 and 100.
  const std::vector<PreToken> p = {
      {"xy", 4}, {"ab", 6}, {"a", 94}, {"zb", 94}};
  const std::size_t v = kNumSpecials + AlphabetSize(p) + 1;
  const TokenizerModel m = TrainWordPiece(p, v);
  EXPECT_EQ(m.vocab.back(), "xy");
  EXPECT_TRUE(m.merges.empty());
}

TEST(TrainWordPieceTest, SingleCharacterCorpusHasNoMerges) {
  const TokenizerModel m = TrainWordPiece(PT{{"a", 10}}, 50);
  EXPECT_EQ(m.vocab.size(), kNumSpecials + 1);
}

TEST(TrainWordPieceTest, RandomTinyCorporaMatchOracle) {
  std::mt19937_64 rng(99);
  for (int round = 0; round < 30; ++round) {
    const auto p = RandomPreTokens(rng, 1 + rng() % 50, "abcdef");
    const std::size_t v = kNumSpecials + AlphabetSize(p) + rng() % 30;
    const TokenizerModel m = TrainWordPiece(p, v);
    const auto oracle = OracleTrain(p, v, OracleObjective::kScore);
    ASSERT_EQ(m.vocab, oracle.vocab) << "round " << round;
  }
}

TEST(TrainWordPieceTest, Deterministic) {
  std::mt19937_64 rng(5);
  const auto p = RandomPreTokens(rng, 40, "abcdef");
  EXPECT_EQ(TrainWordPiece(p, 60), TrainWordPiece(p, 60));
}

TEST(TrainWordLevelTest, Examples) {
  TokenizerModel m = TrainWordLevel(PT{{"a", 3}, {"b", 1}}, 7);
  EXPECT_EQ(m.vocab, (std::vector<std::string>{"[PAD]", "[UNK]", "[CLS]",
                                               "[SEP]", "[MASK]", "a", "b"}));
  m = TrainWordLevel(PT{{"a", 3}, {"b", 1}, {"c", 1}}, 6);
  EXPECT_EQ(m.vocab.size(), 6u);
  EXPECT_EQ(m.vocab.back(), "a");
  m = TrainWordLevel({}, 5);
  EXPECT_EQ(m.vocab.size(), kNumSpecials);
  EXPECT_TRUE(m.merges.empty());
}

TEST(TrainWordLevelTest, TiesBrokenLexicographically) {
  const TokenizerModel m = TrainWordLevel(PT{{"c", 2}, {"b", 2}, {"a", 1}}, 7);
  EXPECT_EQ(m.vocab[5], "b");
  EXPECT_EQ(m.vocab[6], "c");
}

TEST(TrainBpeMorphTest, MergesNeverCrossSegments) {
  const std::vector<Document> docs = Docs({"يتحدثها يتحدثها يتحدثها يتحدثها"});
  const TokenizerModel m =
      TrainBpeMorph(docs, 200, CliticTable::Default());
  EXPECT_EQ(m.kind, TokenizerKind::kBpeMorph);
  ASSERT_TRUE(m.clitic_table.has_value());
  for (const std::string& tok : m.vocab) {
    EXPECT_EQ(tok.find("ثه"), std::string::npos) << tok;
  }
  const Tokenizer t(m);
  EXPECT_EQ(t.Encode("يتحدثها").tokens,
            (std::vector<std::string>{"يتحدث", "+ها"}));
}

TEST(TrainBpeMorphTest, PlusSymbolEntersVocabulary) {
  // Proclitic segments end in the marker, so it appears as a continuation.
  const TokenizerModel m = TrainBpeMorph(Docs({"والكتاب"}), 100,
                                         CliticTable::Default());
  EXPECT_NE(std::find(m.vocab.begin(), m.vocab.end(), "##+"), m.vocab.end());
  // Enclitic segments start with it.
  const TokenizerModel e = TrainBpeMorph(Docs({"كتابها"}), 100,
                                         CliticTable::Default());
  EXPECT_NE(std::find(e.vocab.begin(), e.vocab.end(), "+"), e.vocab.end());
}

TEST(TrainBpeMorphTest, EmptyTableBehavesLikeBpe) {
  const std::vector<Document> docs =
      Docs({"والكتاب كتبها يتحدثها والكتاب", "بالبيت كتبها"});
  const TokenizerModel morph = TrainBpeMorph(docs, 60, CliticTable::Empty());
  TrainOptions opts;
  opts.vocab_size = 60;
  const TokenizerModel plain = Train(docs, opts);
  EXPECT_EQ(morph.vocab, plain.vocab);
  EXPECT_EQ(morph.merges, plain.merges);
  const Tokenizer a(morph), b(plain);
  EXPECT_EQ(a.Encode("والكتاب بالبيت").ids, b.Encode("والكتاب بالبيت").ids);
}

TEST(TrainTest, ThreadCountDoesNotChangeModel) {
  std::vector<Document> docs;
  for (int i = 0; i < 40; ++i) {
    docs.push_back({std::to_string(i),
                    "والكتاب " + std::string(i % 2 ? "كتبها" : "يكتبون") +
                        " بالمدرسة " + std::to_string(i),
                    std::nullopt});
  }
  for (TokenizerKind kind : kAllKinds) {
    TrainOptions opts;
    opts.kind = kind;
    opts.vocab_size = 80;
    opts.threads = 1;
    const TokenizerModel one = Train(docs, opts);
    opts.threads = 4;
    EXPECT_EQ(SerializeModel(one), SerializeModel(Train(docs, opts)))
        << KindName(kind);
  }
}

}  // namespace
}  // namespace arabtok
