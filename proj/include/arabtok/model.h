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

#ifndef ARABTOK_MODEL_H_
#define ARABTOK_MODEL_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "arabtok/morphseg.h"
#include "arabtok/normalize.h"

namespace arabtok {

enum class TokenizerKind { kBpe, kWordPiece, kWordLevel, kBpeMorph };

inline constexpr std::array<TokenizerKind, 4> kAllKinds = {
    TokenizerKind::kBpe, TokenizerKind::kWordPiece, TokenizerKind::kWordLevel,
    TokenizerKind::kBpeMorph};

std::string_view KindName(TokenizerKind kind);
TokenizerKind ParseKind(std::string_view name);

inline bool UsesMerges(TokenizerKind kind) {
  return kind == TokenizerKind::kBpe || kind == TokenizerKind::kBpeMorph;
}

inline constexpr std::string_view kContinuationPrefix = "##";

using TokenId = std::int32_t;

// Reserved tokens at fixed ids.
inline constexpr TokenId kPadId = 0;
inline constexpr TokenId kUnkId = 1;
inline constexpr TokenId kClsId = 2;
inline constexpr TokenId kSepId = 3;
inline constexpr TokenId kMaskId = 4;
inline constexpr std::array<std::string_view, 5> kSpecialTokens = {
    "[PAD]", "[UNK]", "[CLS]", "[SEP]", "[MASK]"};
inline constexpr std::size_t kNumSpecials = kSpecialTokens.size();

inline constexpr int kFormatVersion = 1;

class ModelFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A trained tokenizer. Ids are positions in `vocab`.
struct TokenizerModel {
  TokenizerKind kind = TokenizerKind::kBpe;
  std::vector<std::string> vocab;
  // Priority order; empty unless UsesMerges(kind).
  std::vector<std::pair<std::string, std::string>> merges;
  NormalizerConfig normalizer;
  // Only meaningful for kBpeMorph.
  std::optional<CliticTable> clitic_table;

  // Checks the structural invariants; throws ModelFormatError.
  void Validate() const;

  bool operator==(const TokenizerModel&) const = default;
};

// The token a merge of (left, right) produces: right loses its "##".
std::string MergedToken(std::string_view left, std::string_view right);

// Canonical bundle form. Identical models give identical bytes.
std::string SerializeModel(const TokenizerModel& model);
TokenizerModel DeserializeModel(std::string_view bundle);

// Writes through a temporary file and rename.
void SaveModel(const TokenizerModel& model, const std::filesystem::path& path);
TokenizerModel LoadModel(const std::filesystem::path& path);

// vocab.txt: one token per line, line number is the id.
// merges.txt: one "left right" pair per line in priority order.
void ExportVocabTxt(const TokenizerModel& model,
                    const std::filesystem::path& path);
void ExportMergesTxt(const TokenizerModel& model,
                     const std::filesystem::path& path);

// Tokens emitted for one encoded text.
struct Encoding {
  std::vector<TokenId> ids;
  std::vector<std::string> tokens;
  std::uint64_t word_count = 0;
};

}  // namespace arabtok

#endif  // ARABTOK_MODEL_H_
