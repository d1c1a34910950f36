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

#include <limits>
#include <utility>

#include "arabtok/morphseg.h"
#include "arabtok/normalize.h"
#include "arabtok/unicode.h"

namespace arabtok {
namespace {

std::uint64_t PairKey(TokenId left, TokenId right) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(left)) << 32) |
         static_cast<std::uint32_t>(right);
}

bool IsContinuation(std::string_view token) {
  return token.size() > kContinuationPrefix.size() &&
         token.substr(0, kContinuationPrefix.size()) == kContinuationPrefix;
}

}  // namespace

Tokenizer::Tokenizer(TokenizerModel model) : model_(std::move(model)) {
  model_.Validate();
  ids_.reserve(model_.vocab.size());
  for (std::size_t i = 0; i < model_.vocab.size(); ++i) {
    const std::string& token = model_.vocab[i];
    ids_.emplace(token, static_cast<TokenId>(i));
    std::string_view body = token;
    if (IsContinuation(body)) body.remove_prefix(kContinuationPrefix.size());
    max_token_chars_ = std::max(max_token_chars_, unicode::CodepointLength(body));
  }
  for (std::size_t rank = 0; rank < model_.merges.size(); ++rank) {
    const auto& [left, right] = model_.merges[rank];
    // Validate() guarantees all three tokens exist.
    merge_rules_.try_emplace(
        PairKey(ids_.find(left)->second, ids_.find(right)->second),
        MergeRule{static_cast<std::uint32_t>(rank),
                  ids_.find(MergedToken(left, right))->second});
  }
}

std::optional<TokenId> Tokenizer::Find(std::string_view token) const {
  const auto it = ids_.find(token);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

const std::string& Tokenizer::TokenOf(TokenId id) const {
  if (id < 0 || static_cast<std::size_t>(id) >= model_.vocab.size()) {
    throw DecodeError("token id " + std::to_string(id) +
                      " outside vocabulary of size " +
                      std::to_string(model_.vocab.size()));
  }
  return model_.vocab[id];
}

Encoding Tokenizer::Encode(std::string_view text) const {
  return EncodeNormalized(Normalize(text, model_.normalizer));
}

Encoding Tokenizer::EncodeNormalized(std::string_view normalized) const {
  Encoding enc;
  for (std::string_view word : unicode::SplitWhitespace(normalized)) {
    EncodeWord(word, &enc.ids);
    ++enc.word_count;
  }
  enc.tokens.reserve(enc.ids.size());
  for (TokenId id : enc.ids) enc.tokens.push_back(model_.vocab[id]);
  return enc;
}

void Tokenizer::EncodeWord(std::string_view word,
                           std::vector<TokenId>* ids) const {
  if (model_.kind != TokenizerKind::kBpeMorph) {
    EncodeUnit(word, ids);
    return;
  }
  const Segmentation seg = SegmentWord(word, *model_.clitic_table);
  for (const std::string& segment : seg.segments) EncodeUnit(segment, ids);
}

void Tokenizer::EncodeUnit(std::string_view unit,
                           std::vector<TokenId>* ids) const {
  switch (model_.kind) {
    case TokenizerKind::kBpe:
    case TokenizerKind::kBpeMorph:
      EncodeBpeUnit(unit, ids);
      return;
    case TokenizerKind::kWordPiece:
      EncodeWordPieceUnit(unit, ids);
      return;
    case TokenizerKind::kWordLevel: {
      const auto id = Find(unit);
      ids->push_back(id ? *id : kUnkId);
      return;
    }
  }
}

void Tokenizer::EncodeBpeUnit(std::string_view unit,
                              std::vector<TokenId>* ids) const {
  // Characters missing from the vocabulary become [UNK] and block merges.
  std::vector<TokenId> symbols;
  std::vector<bool> blocked;
  std::string piece;
  bool first = true;
  std::size_t pos = 0;
  while (pos < unit.size()) {
    const std::size_t start = pos;
    unicode::DecodeNext(unit, &pos);
    piece.assign(first ? "" : kContinuationPrefix);
    piece.append(unit.substr(start, pos - start));
    first = false;
    const auto id = Find(piece);
    symbols.push_back(id ? *id : kUnkId);
    blocked.push_back(!id);
  }

  while (symbols.size() > 1) {
    std::uint32_t best_rank = std::numeric_limits<std::uint32_t>::max();
    TokenId best_left = 0, best_right = 0, best_merged = 0;
    for (std::size_t j = 0; j + 1 < symbols.size(); ++j) {
      if (blocked[j] || blocked[j + 1]) continue;
      const auto it = merge_rules_.find(PairKey(symbols[j], symbols[j + 1]));
      if (it != merge_rules_.end() && it->second.rank < best_rank) {
        best_rank = it->second.rank;
        best_left = symbols[j];
        best_right = symbols[j + 1];
        best_merged = it->second.merged;
      }
    }
    if (best_rank == std::numeric_limits<std::uint32_t>::max()) break;
    std::size_t w = 0;
    for (std::size_t j = 0; j < symbols.size(); ++j, ++w) {
      if (j + 1 < symbols.size() && !blocked[j] && !blocked[j + 1] &&
          symbols[j] == best_left && symbols[j + 1] == best_right) {
        symbols[w] = best_merged;
        blocked[w] = false;
        ++j;
      } else {
        symbols[w] = symbols[j];
        blocked[w] = blocked[j];
      }
    }
    symbols.resize(w);
    blocked.resize(w);
  }
  ids->insert(ids->end(), symbols.begin(), symbols.end());
}

void Tokenizer::EncodeWordPieceUnit(std::string_view unit,
                                    std::vector<TokenId>* ids) const {
  std::vector<std::size_t> offsets;  // byte offset of each codepoint, plus end
  std::size_t pos = 0;
  while (pos < unit.size()) {
    offsets.push_back(pos);
    unicode::DecodeNext(unit, &pos);
  }
  offsets.push_back(unit.size());
  const std::size_t n = offsets.size() - 1;
  if (n > kMaxWordPieceChars) {
    ids->push_back(kUnkId);
    return;
  }
  const std::size_t mark = ids->size();
  std::string candidate;
  std::size_t start = 0;
  while (start < n) {
    std::size_t end = std::min(n, start + max_token_chars_);
    std::optional<TokenId> found;
    for (; end > start; --end) {
      candidate.assign(start == 0 ? "" : kContinuationPrefix);
      candidate.append(unit.substr(offsets[start], offsets[end] - offsets[start]));
      found = Find(candidate);
      if (found) break;
    }
    if (!found) {
      ids->resize(mark);
      ids->push_back(kUnkId);
      return;
    }
    ids->push_back(*found);
    start = end;
  }
}

std::string Tokenizer::Decode(std::span<const TokenId> ids) const {
  std::string out;
  for (TokenId id : ids) {
    const std::string& token = TokenOf(id);
    if (id < static_cast<TokenId>(kNumSpecials) && id != kUnkId) continue;
    if (IsContinuation(token)) {
      out.append(token, kContinuationPrefix.size());
      continue;
    }
    if (!out.empty()) out.push_back(' ');
    out.append(token);
  }
  if (model_.kind == TokenizerKind::kBpeMorph) return DesegmentText(out);
  return out;
}

Encoding Encode(const TokenizerModel& model, std::string_view text) {
  return Tokenizer(model).Encode(text);
}

std::string Decode(const TokenizerModel& model, std::span<const TokenId> ids) {
  return Tokenizer(model).Decode(ids);
}

}  // namespace arabtok
