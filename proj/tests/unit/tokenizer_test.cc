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

#include "arabtok/tokenizer.h"

#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "arabtok/trainer.h"

namespace arabtok {
namespace {

using Tokens = std::vector<std::string>;

TokenizerModel Base(TokenizerKind kind, std::vector<std::string> extra) {
  TokenizerModel m;
  m.kind = kind;
  for (std::string_view s : kSpecialTokens) m.vocab.emplace_back(s);
  for (std::string& e : extra) m.vocab.push_back(std::move(e));
  if (kind == TokenizerKind::kBpeMorph) m.clitic_table = CliticTable::Default();
  return m;
}

TEST(EncodeTest, WordLevelOutOfVocabulary) {
  const Tokenizer t(Base(TokenizerKind::kWordLevel, {"كتاب"}));
  const Encoding e = t.Encode("جديد");
  EXPECT_EQ(e.ids, (std::vector<TokenId>{kUnkId}));
  EXPECT_EQ(e.tokens, (Tokens{"[UNK]"}));
  EXPECT_EQ(e.word_count, 1u);
  EXPECT_EQ(t.Encode("كتاب جديد").ids, (std::vector<TokenId>{5, kUnkId}));
}

TEST(EncodeTest, ZeroMergeBpeFallsBackToCharacters) {
  const Tokenizer t(Base(TokenizerKind::kBpe, {"ك", "##ت", "##ا", "##ب"}));
  const Encoding e = t.Encode("كتاب");
  EXPECT_EQ(e.tokens, (Tokens{"ك", "##ت", "##ا", "##ب"}));
  EXPECT_EQ(e.word_count, 1u);
}

TEST(EncodeTest, BpeAppliesMergesByPriority) {
  TokenizerModel m = Base(TokenizerKind::kBpe,
                          {"a", "##b", "##c", "##bc", "ab", "abc"});
  m.merges = {{"##b", "##c"}, {"a", "##b"}, {"a", "##bc"}};
  const Tokenizer t(m);
  // Rank 0 wins first, so "a" then joins "##bc" rather than "##b".
  EXPECT_EQ(t.Encode("abc").tokens, (Tokens{"abc"}));
  EXPECT_EQ(t.Encode("ab").tokens, (Tokens{"ab"}));
}

TEST(EncodeTest, BpeUnknownCharacterBlocksMerges) {
  TokenizerModel m = Base(TokenizerKind::kBpe, {"a", "##b", "ab", "##a"});
  m.merges = {{"a", "##b"}};
  const Tokenizer t(m);
  const Encoding e = t.Encode("axab");
  EXPECT_EQ(e.tokens, (Tokens{"a", "[UNK]", "##a", "##b"}));
}

TEST(EncodeTest, WordPieceGreedyLongestMatch) {
  const Tokenizer t(
      Base(TokenizerKind::kWordPiece, {"ي", "يتحدث", "##ها", "##ه", "##ا"}));
  EXPECT_EQ(t.Encode("يتحدثها").tokens, (Tokens{"يتحدث", "##ها"}));
  // No piece matches "x", so the whole word is unknown.
  EXPECT_EQ(t.Encode("يتحدثx").tokens, (Tokens{"[UNK]"}));
}

TEST(EncodeTest, WordPieceLongWordIsUnknown) {
  TokenizerModel m = Base(TokenizerKind::kWordPiece, {"a", "##a"});
  m.normalizer.collapse_repeats = false;
  const Tokenizer t(m);
  EXPECT_EQ(t.Encode(std::string(100, 'a')).ids.size(), 100u);
  EXPECT_EQ(t.Encode(std::string(101, 'a')).tokens, (Tokens{"[UNK]"}));
}

TEST(EncodeTest, BpeMorphCountsOriginalWords) {
  const std::vector<Document> docs = {
      {"", "يتحدثها يتحدثها", std::nullopt}};
  const Tokenizer t(TrainBpeMorph(docs, 100, CliticTable::Default()));
  const Encoding e = t.Encode("يتحدثها");
  EXPECT_EQ(e.tokens, (Tokens{"يتحدث", "+ها"}));
  EXPECT_EQ(e.word_count, 1u);
  EXPECT_EQ(t.Decode(e.ids), "يتحدثها");
}

TEST(EncodeTest, IdsAndTokensAgree) {
  const Tokenizer t(Base(TokenizerKind::kWordPiece, {"ك", "##ت", "##ا", "##ب"}));
  const Encoding e = t.Encode("كتاب باك");
  ASSERT_EQ(e.ids.size(), e.tokens.size());
  for (std::size_t i = 0; i < e.ids.size(); ++i) {
    EXPECT_EQ(t.TokenOf(e.ids[i]), e.tokens[i]);
  }
}

TEST(DecodeTest, Examples) {
  const Tokenizer wp(Base(TokenizerKind::kWordPiece, {"يتحدث", "##ها"}));
  EXPECT_EQ(wp.Decode(std::vector<TokenId>{5, 6}), "يتحدثها");
  const Tokenizer morph(Base(TokenizerKind::kBpeMorph, {"يتحدث", "+ها"}));
  EXPECT_EQ(morph.Decode(std::vector<TokenId>{5, 6}), "يتحدثها");
}

TEST(DecodeTest, DropsSpecialsExceptUnk) {
  const Tokenizer t(Base(TokenizerKind::kWordLevel, {"a", "b"}));
  EXPECT_EQ(t.Decode(std::vector<TokenId>{kClsId, 5, kUnkId, 6, kSepId, kPadId}),
            "a [UNK] b");
}

TEST(DecodeTest, OutOfRangeIdThrows) {
  const Tokenizer t(Base(TokenizerKind::kWordLevel, {"a"}));
  EXPECT_THROW(t.Decode(std::vector<TokenId>{6}), DecodeError);
  EXPECT_THROW(t.Decode(std::vector<TokenId>{-1}), DecodeError);
}

TEST(RoundTripTest, TrainedModelsReproduceNormalizedText) {
  std::vector<Document> docs;
  const char* texts[] = {"والكتاب الجديد على الطاولة", "يتحدثها الطلاب كثيرا",
                         "<b>مُحَمَّد</b> زار المكتبة ٢٠٢٤", "كتب كتابها بالقلم"};
  for (const char* t : texts) docs.push_back({"", t, std::nullopt});
  for (TokenizerKind kind :
       {TokenizerKind::kBpe, TokenizerKind::kBpeMorph, TokenizerKind::kWordPiece}) {
    TrainOptions opts;
    opts.kind = kind;
    opts.vocab_size = 120;
    const Tokenizer t(Train(docs, opts));
    for (const Document& d : docs) {
      const std::string want = Normalize(d.text, opts.normalizer);
      const Encoding e = t.Encode(d.text);
      EXPECT_EQ(t.Decode(e.ids), want) << KindName(kind);
    }
  }
}

TEST(EncodeTest, KnownWordRoundTrip) {
  std::vector<Document> docs = {{"", "كتاب جديد كتاب جديد", std::nullopt}};
  TrainOptions opts;
  opts.vocab_size = 40;
  const Tokenizer t(Train(docs, opts));
  EXPECT_EQ(t.Decode(t.Encode("كتاب جديد").ids), "كتاب جديد");
}

}  // namespace
}  // namespace arabtok
