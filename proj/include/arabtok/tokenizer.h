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

#ifndef ARABTOK_TOKENIZER_H_
#define ARABTOK_TOKENIZER_H_

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "arabtok/model.h"

namespace arabtok {

inline constexpr std::size_t kMaxWordPieceChars = 100;

class DecodeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Read-only view over a TokenizerModel with lookup tables built once.
// Encode and Decode are const and safe to call concurrently.
class Tokenizer {
 public:
  explicit Tokenizer(TokenizerModel model);

  const TokenizerModel& model() const { return model_; }
  std::size_t vocab_size() const { return model_.vocab.size(); }

  // Normalizes with the embedded config, then encodes. word_count is the
  // number of whitespace words of the normalized (unsegmented) text.
  Encoding Encode(std::string_view text) const;

  // Text must already be normalized.
  Encoding EncodeNormalized(std::string_view normalized) const;

  // Ids for one whitespace word of normalized text. For bpe_morph the word
  // is segmented first and the ids of all its segments are returned.
  void EncodeWord(std::string_view word, std::vector<TokenId>* ids) const;

  // Joins "##" pieces onto the previous token and other tokens with single
  // spaces; drops specials except [UNK]; desegments for bpe_morph. Throws
  // DecodeError on an id outside the vocabulary.
  std::string Decode(std::span<const TokenId> ids) const;

  std::optional<TokenId> Find(std::string_view token) const;
  const std::string& TokenOf(TokenId id) const;

 private:
  void EncodeUnit(std::string_view unit, std::vector<TokenId>* ids) const;
  void EncodeBpeUnit(std::string_view unit, std::vector<TokenId>* ids) const;
  void EncodeWordPieceUnit(std::string_view unit,
                           std::vector<TokenId>* ids) const;

  struct MergeRule {
    std::uint32_t rank;
    TokenId merged;
  };

  struct StringHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const {
      return std::hash<std::string_view>{}(s);
    }
  };

  TokenizerModel model_;
  std::unordered_map<std::string, TokenId, StringHash, std::equal_to<>> ids_;
  std::unordered_map<std::uint64_t, MergeRule> merge_rules_;
  std::size_t max_token_chars_ = 0;
};

// One-shot conveniences; prefer a Tokenizer for repeated use.
Encoding Encode(const TokenizerModel& model, std::string_view text);
std::string Decode(const TokenizerModel& model, std::span<const TokenId> ids);

}  // namespace arabtok

#endif  // ARABTOK_TOKENIZER_H_
