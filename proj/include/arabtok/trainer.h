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

// Tokenizer training.
//
// All subword trainers start from a character alphabet in which the first
// character of a pre-token is bare and every later one carries "##". Merges
// never cross pre-token boundaries and need a pair count of at least 2.
//
// Ties on the selection key are broken toward the lexicographically
// greatest (left, right) pair, compared bytewise.

#ifndef ARABTOK_TRAINER_H_
#define ARABTOK_TRAINER_H_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "arabtok/corpus.h"
#include "arabtok/model.h"

namespace arabtok {

struct PreToken {
  std::string surface;
  std::uint64_t count = 0;

  bool operator==(const PreToken&) const = default;
};

class TrainingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Normalizes every document, segments it when kind is kBpeMorph, and
// tallies whitespace units. The result is sorted by surface, so it does not
// depend on document order or on the thread count.
std::vector<PreToken> CountPreTokens(std::span<const Document> corpus,
                                     TokenizerKind kind,
                                     const NormalizerConfig& normalizer,
                                     const CliticTable& clitics,
                                     unsigned threads = 1);

inline constexpr std::uint64_t kMinMergeCount = 2;

struct TrainStats {
  std::size_t alphabet_size = 0;
  // Symbols dropped because the alphabet alone exceeded the budget.
  std::size_t truncated_symbols = 0;
  std::size_t merges = 0;
  std::vector<std::string> warnings;
};

// Frequency merges. Throws TrainingError when vocab_size leaves no room
// for a single symbol after the specials.
TokenizerModel TrainBpe(std::span<const PreToken> pretokens,
                        std::size_t vocab_size, TrainStats* stats = nullptr);

// Merges maximizing count(ab) / (count(a) * count(b)); ties go to the
// higher pair count, then lexicographically. The model keeps the vocabulary
// only; encoding is greedy longest match.
TokenizerModel TrainWordPiece(std::span<const PreToken> pretokens,
                              std::size_t vocab_size,
                              TrainStats* stats = nullptr);

// Specials plus the vocab_size - 5 most frequent surfaces (count desc,
// surface asc).
TokenizerModel TrainWordLevel(std::span<const PreToken> pretokens,
                              std::size_t vocab_size);

// TrainBpe over clitic-segmented pre-tokens.
TokenizerModel TrainBpeMorph(std::span<const Document> corpus,
                             std::size_t vocab_size,
                             const CliticTable& clitics,
                             const NormalizerConfig& normalizer = {},
                             unsigned threads = 1,
                             TrainStats* stats = nullptr);

struct TrainOptions {
  TokenizerKind kind = TokenizerKind::kBpe;
  std::size_t vocab_size = 16000;
  NormalizerConfig normalizer;
  CliticTable clitics = CliticTable::Default();
  unsigned threads = 1;
};

// Trains from already-counted pre-tokens; they must have been counted for
// options.kind. Sets the embedded normalizer and clitic table.
TokenizerModel TrainFromPreTokens(std::span<const PreToken> pretokens,
                                  const TrainOptions& options,
                                  TrainStats* stats = nullptr);

TokenizerModel Train(std::span<const Document> corpus,
                     const TrainOptions& options, TrainStats* stats = nullptr);

}  // namespace arabtok

#endif  // ARABTOK_TRAINER_H_
