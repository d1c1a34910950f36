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

#include <algorithm>
#include <thread>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "arabtok/unicode.h"

namespace arabtok {
namespace {

using PairKey = std::uint64_t;
using SymbolId = std::int32_t;
constexpr SymbolId kBarrier = -1;

PairKey MakeKey(SymbolId left, SymbolId right) {
  return (static_cast<PairKey>(static_cast<std::uint32_t>(left)) << 32) |
         static_cast<std::uint32_t>(right);
}
SymbolId KeyLeft(PairKey key) { return static_cast<SymbolId>(key >> 32); }
SymbolId KeyRight(PairKey key) {
  return static_cast<SymbolId>(key & 0xffffffffULL);
}

std::vector<std::string> InitialSymbols(std::string_view surface) {
  std::vector<std::string> chars = unicode::SplitChars(surface);
  for (std::size_t i = 1; i < chars.size(); ++i) {
    chars[i].insert(0, kContinuationPrefix);
  }
  return chars;
}

enum class Objective { kFrequency, kLikelihood };

// Incremental pair-merge loop shared by BPE and WordPiece. Pair counts are
// updated only for the words that contain the merged pair; a lazy max-heap
// holds candidate pairs and stale entries are dropped when popped.
class MergeLoop {
 public:
  MergeLoop(std::span<const PreToken> pretokens, std::size_t vocab_size,
            Objective objective, TrainStats* stats)
      : objective_(objective), vocab_size_(vocab_size), stats_(stats) {
    if (vocab_size <= kNumSpecials) {
      throw TrainingError("vocab_size " + std::to_string(vocab_size) +
                          " leaves no room beyond the " +
                          std::to_string(kNumSpecials) + " special tokens");
    }
    if (pretokens.empty()) throw TrainingError("no pre-tokens to train on");
    BuildAlphabet(pretokens);
  }

  // Returns the vocabulary (specials first) and the merges in order.
  void Run(std::vector<std::string>* vocab,
           std::vector<std::pair<std::string, std::string>>* merges) {
    CountAllPairs();
    RebuildHeap();
    std::size_t vocab_now = kNumSpecials + alphabet_size_;
    while (vocab_now < vocab_size_) {
      PairKey best;
      if (!PopBest(&best)) break;
      const SymbolId left = KeyLeft(best);
      const SymbolId right = KeyRight(best);
      merges->emplace_back(symbols_[left], symbols_[right]);
      bool is_new = false;
      const SymbolId merged = Intern(MergedToken(symbols_[left], symbols_[right]),
                                     &is_new);
      if (is_new) {
        created_.push_back(merged);
        ++vocab_now;
      }
      ApplyMerge(left, right, merged);
      if (heap_.size() > 4 * pair_count_.size() + (1u << 20)) RebuildHeap();
    }
    vocab->clear();
    for (std::string_view s : kSpecialTokens) vocab->emplace_back(s);
    for (SymbolId id = 0; id < static_cast<SymbolId>(alphabet_size_); ++id) {
      vocab->push_back(symbols_[id]);
    }
    for (SymbolId id : created_) vocab->push_back(symbols_[id]);
    if (stats_) stats_->merges = merges->size();
  }

 private:
  struct Word {
    std::vector<SymbolId> symbols;
    std::uint64_t count;
  };

  struct Candidate {
    PairKey key;
    std::uint64_t count;
    std::uint64_t left_count;
    std::uint64_t right_count;
  };

  void BuildAlphabet(std::span<const PreToken> pretokens) {
    std::unordered_map<std::string, std::uint64_t> freq;
    std::vector<std::vector<std::string>> split;
    split.reserve(pretokens.size());
    for (const PreToken& pt : pretokens) {
      split.push_back(InitialSymbols(pt.surface));
      for (const std::string& s : split.back()) freq[s] += pt.count;
    }
    std::vector<std::pair<std::string, std::uint64_t>> alphabet(freq.begin(),
                                                                 freq.end());
    const std::size_t budget = vocab_size_ - kNumSpecials;
    if (alphabet.size() > budget) {
      std::sort(alphabet.begin(), alphabet.end(), [](const auto& a, const auto& b) {
        return a.second != b.second ? a.second > b.second : a.first < b.first;
      });
      const std::size_t dropped = alphabet.size() - budget;
      alphabet.resize(budget);
      if (stats_) {
        stats_->truncated_symbols = dropped;
        stats_->warnings.push_back(
            "alphabet exceeds vocabulary budget; " + std::to_string(dropped) +
            " rare symbols map to [UNK]");
      }
    }
    std::sort(alphabet.begin(), alphabet.end());
    alphabet_size_ = alphabet.size();
    if (stats_) stats_->alphabet_size = alphabet_size_;
    for (const auto& [s, n] : alphabet) {
      bool is_new = false;
      const SymbolId id = Intern(s, &is_new);
      symbol_count_[id] = n;
    }
    words_.reserve(pretokens.size());
    for (std::size_t i = 0; i < pretokens.size(); ++i) {
      Word w{{}, pretokens[i].count};
      w.symbols.reserve(split[i].size());
      for (const std::string& s : split[i]) {
        const auto it = index_.find(s);
        w.symbols.push_back(it == index_.end() ? kBarrier : it->second);
      }
      if (w.symbols.size() >= 2) words_.push_back(std::move(w));
    }
  }

  SymbolId Intern(const std::string& s, bool* is_new) {
    const auto [it, inserted] =
        index_.try_emplace(s, static_cast<SymbolId>(symbols_.size()));
    *is_new = inserted;
    if (inserted) {
      symbols_.push_back(s);
      symbol_count_.push_back(0);
      symbol_pairs_.emplace_back();
    }
    return it->second;
  }

  void CountAllPairs() {
    for (std::uint32_t w = 0; w < words_.size(); ++w) {
      const Word& word = words_[w];
      for (std::size_t j = 0; j + 1 < word.symbols.size(); ++j) {
        const SymbolId a = word.symbols[j];
        const SymbolId b = word.symbols[j + 1];
        if (a == kBarrier || b == kBarrier) continue;
        const PairKey key = MakeKey(a, b);
        AdjustPair(key, static_cast<std::int64_t>(word.count));
        auto& where = where_[key];
        if (where.empty() || where.back() != w) where.push_back(w);
      }
    }
    last_seen_.assign(words_.size(), 0);
  }

  void AdjustPair(PairKey key, std::int64_t delta) {
    auto it = pair_count_.find(key);
    const std::uint64_t before = it == pair_count_.end() ? 0 : it->second;
    const std::uint64_t after =
        static_cast<std::uint64_t>(static_cast<std::int64_t>(before) + delta);
    if (after == 0) {
      if (it != pair_count_.end()) pair_count_.erase(it);
      if (objective_ == Objective::kLikelihood && before != 0) {
        symbol_pairs_[KeyLeft(key)].erase(key);
        symbol_pairs_[KeyRight(key)].erase(key);
      }
      return;
    }
    if (it == pair_count_.end()) {
      pair_count_.emplace(key, after);
    } else {
      it->second = after;
    }
    if (objective_ == Objective::kLikelihood && before == 0) {
      symbol_pairs_[KeyLeft(key)].insert(key);
      symbol_pairs_[KeyRight(key)].insert(key);
    }
  }

  std::uint64_t PairCount(PairKey key) const {
    const auto it = pair_count_.find(key);
    return it == pair_count_.end() ? 0 : it->second;
  }

  Candidate Snapshot(PairKey key) const {
    return {key, PairCount(key),
            static_cast<std::uint64_t>(symbol_count_[KeyLeft(key)]),
            static_cast<std::uint64_t>(symbol_count_[KeyRight(key)])};
  }

  bool IsCurrent(const Candidate& c) const {
    if (c.count != PairCount(c.key)) return false;
    if (objective_ == Objective::kFrequency) return true;
    return c.left_count == symbol_count_[KeyLeft(c.key)] &&
           c.right_count == symbol_count_[KeyRight(c.key)];
  }

  // Strict weak order: true when a ranks below b.
  bool Below(const Candidate& a, const Candidate& b) const {
    if (objective_ == Objective::kLikelihood) {
      using u128 = unsigned __int128;
      const u128 lhs = static_cast<u128>(a.count) * b.left_count * b.right_count;
      const u128 rhs = static_cast<u128>(b.count) * a.left_count * a.right_count;
      if (lhs != rhs) return lhs < rhs;
    }
    if (a.count != b.count) return a.count < b.count;
    const std::string& al = symbols_[KeyLeft(a.key)];
    const std::string& bl = symbols_[KeyLeft(b.key)];
    if (al != bl) return al < bl;
    return symbols_[KeyRight(a.key)] < symbols_[KeyRight(b.key)];
  }

  void Push(PairKey key) {
    const Candidate c = Snapshot(key);
    if (c.count < kMinMergeCount) return;
    heap_.push_back(c);
    std::push_heap(heap_.begin(), heap_.end(),
                   [this](const Candidate& a, const Candidate& b) {
                     return Below(a, b);
                   });
  }

  void RebuildHeap() {
    heap_.clear();
    for (const auto& [key, count] : pair_count_) {
      if (count >= kMinMergeCount) heap_.push_back(Snapshot(key));
    }
    std::make_heap(heap_.begin(), heap_.end(),
                   [this](const Candidate& a, const Candidate& b) {
                     return Below(a, b);
                   });
  }

  bool PopBest(PairKey* best) {
    const auto below = [this](const Candidate& a, const Candidate& b) {
      return Below(a, b);
    };
    while (!heap_.empty()) {
      std::pop_heap(heap_.begin(), heap_.end(), below);
      const Candidate top = heap_.back();
      heap_.pop_back();
      if (!IsCurrent(top)) continue;
      *best = top.key;
      return true;
    }
    return false;
  }

  void ApplyMerge(SymbolId left, SymbolId right, SymbolId merged) {
    const PairKey merged_key = MakeKey(left, right);
    ++stamp_;
    std::unordered_map<PairKey, std::int64_t> delta;
    std::vector<std::uint32_t> occurrences = std::move(where_[merged_key]);
    where_.erase(merged_key);
    std::vector<SymbolId> out;
    for (const std::uint32_t w : occurrences) {
      if (last_seen_[w] == stamp_) continue;
      last_seen_[w] = stamp_;
      Word& word = words_[w];
      const auto n = static_cast<std::int64_t>(word.count);
      std::vector<SymbolId>& syms = word.symbols;
      bool present = false;
      for (std::size_t j = 0; j + 1 < syms.size(); ++j) {
        if (syms[j] == left && syms[j + 1] == right) {
          present = true;
          break;
        }
      }
      if (!present) continue;
      for (std::size_t j = 0; j + 1 < syms.size(); ++j) {
        if (syms[j] != kBarrier && syms[j + 1] != kBarrier) {
          delta[MakeKey(syms[j], syms[j + 1])] -= n;
        }
      }
      out.clear();
      for (std::size_t j = 0; j < syms.size(); ++j) {
        if (j + 1 < syms.size() && syms[j] == left && syms[j + 1] == right) {
          out.push_back(merged);
          symbol_count_[left] -= word.count;
          symbol_count_[right] -= word.count;
          symbol_count_[merged] += word.count;
          ++j;
        } else {
          out.push_back(syms[j]);
        }
      }
      syms = out;
      for (std::size_t j = 0; j + 1 < syms.size(); ++j) {
        if (syms[j] == kBarrier || syms[j + 1] == kBarrier) continue;
        const PairKey key = MakeKey(syms[j], syms[j + 1]);
        delta[key] += n;
        if (syms[j] == merged || syms[j + 1] == merged) {
          auto& where = where_[key];
          if (where.empty() || where.back() != w) where.push_back(w);
        }
      }
    }

    std::vector<PairKey> touched;
    touched.reserve(delta.size());
    for (const auto& [key, d] : delta) {
      if (d == 0) continue;
      AdjustPair(key, d);
      touched.push_back(key);
    }
    if (objective_ == Objective::kLikelihood) {
      // Unigram counts of left, right and merged moved, so every pair that
      // involves them has a new score.
      std::unordered_set<PairKey> rescore(touched.begin(), touched.end());
      for (SymbolId s : {left, right, merged}) {
        rescore.insert(symbol_pairs_[s].begin(), symbol_pairs_[s].end());
      }
      touched.assign(rescore.begin(), rescore.end());
    }
    for (PairKey key : touched) Push(key);
  }

  Objective objective_;
  std::size_t vocab_size_;
  TrainStats* stats_;

  std::vector<std::string> symbols_;
  std::unordered_map<std::string, SymbolId> index_;
  std::vector<std::uint64_t> symbol_count_;
  std::vector<std::unordered_set<PairKey>> symbol_pairs_;
  std::size_t alphabet_size_ = 0;
  std::vector<SymbolId> created_;

  std::vector<Word> words_;
  std::unordered_map<PairKey, std::uint64_t> pair_count_;
  std::unordered_map<PairKey, std::vector<std::uint32_t>> where_;
  std::vector<std::uint32_t> last_seen_;
  std::uint32_t stamp_ = 0;
  std::vector<Candidate> heap_;
};

struct StringHash {
  using is_transparent = void;
  std::size_t operator()(std::string_view s) const {
    return std::hash<std::string_view>{}(s);
  }
};
using Counts =
    std::unordered_map<std::string, std::uint64_t, StringHash, std::equal_to<>>;

void CountShard(std::span<const Document> docs, TokenizerKind kind,
                const NormalizerConfig& normalizer, const CliticTable& clitics,
                Counts* counts) {
  for (const Document& doc : docs) {
    std::string text = Normalize(doc.text, normalizer);
    if (kind == TokenizerKind::kBpeMorph) text = SegmentText(text, clitics);
    for (std::string_view unit : unicode::SplitWhitespace(text)) {
      auto it = counts->find(unit);
      if (it == counts->end()) {
        counts->emplace(std::string(unit), 1);
      } else {
        ++it->second;
      }
    }
  }
}

}  // namespace

std::vector<PreToken> CountPreTokens(std::span<const Document> corpus,
                                     TokenizerKind kind,
                                     const NormalizerConfig& normalizer,
                                     const CliticTable& clitics,
                                     unsigned threads) {
  threads = std::max(1u, std::min<unsigned>(threads, corpus.size() + 1));
  std::vector<Counts> shards(threads);
  if (threads == 1) {
    CountShard(corpus, kind, normalizer, clitics, &shards[0]);
  } else {
    std::vector<std::thread> workers;
    const std::size_t per = (corpus.size() + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::size_t begin = std::min(corpus.size(), t * per);
      const std::size_t end = std::min(corpus.size(), begin + per);
      workers.emplace_back(CountShard, corpus.subspan(begin, end - begin), kind,
                           std::cref(normalizer), std::cref(clitics),
                           &shards[t]);
    }
    for (std::thread& w : workers) w.join();
    for (unsigned t = 1; t < threads; ++t) {
      for (auto& [surface, n] : shards[t]) shards[0][surface] += n;
    }
  }
  std::vector<PreToken> out;
  out.reserve(shards[0].size());
  for (auto& [surface, n] : shards[0]) out.push_back({surface, n});
  std::sort(out.begin(), out.end(), [](const PreToken& a, const PreToken& b) {
    return a.surface < b.surface;
  });
  return out;
}

TokenizerModel TrainBpe(std::span<const PreToken> pretokens,
                        std::size_t vocab_size, TrainStats* stats) {
  TokenizerModel model;
  model.kind = TokenizerKind::kBpe;
  MergeLoop loop(pretokens, vocab_size, Objective::kFrequency, stats);
  loop.Run(&model.vocab, &model.merges);
  return model;
}

TokenizerModel TrainWordPiece(std::span<const PreToken> pretokens,
                              std::size_t vocab_size, TrainStats* stats) {
  TokenizerModel model;
  model.kind = TokenizerKind::kWordPiece;
  std::vector<std::pair<std::string, std::string>> merges;
  MergeLoop loop(pretokens, vocab_size, Objective::kLikelihood, stats);
  loop.Run(&model.vocab, &merges);
  return model;
}

TokenizerModel TrainWordLevel(std::span<const PreToken> pretokens,
                              std::size_t vocab_size) {
  if (vocab_size < kNumSpecials) {
    throw TrainingError("vocab_size must be at least " +
                        std::to_string(kNumSpecials));
  }
  std::vector<const PreToken*> ranked;
  ranked.reserve(pretokens.size());
  for (const PreToken& pt : pretokens) ranked.push_back(&pt);
  const std::size_t budget =
      std::min(vocab_size - kNumSpecials, ranked.size());
  std::partial_sort(ranked.begin(), ranked.begin() + budget, ranked.end(),
                    [](const PreToken* a, const PreToken* b) {
                      return a->count != b->count ? a->count > b->count
                                                  : a->surface < b->surface;
                    });
  TokenizerModel model;
  model.kind = TokenizerKind::kWordLevel;
  for (std::string_view s : kSpecialTokens) model.vocab.emplace_back(s);
  for (std::size_t i = 0; i < budget; ++i) {
    // A corpus word spelled like a special token is already covered.
    if (std::find(kSpecialTokens.begin(), kSpecialTokens.end(),
                  ranked[i]->surface) != kSpecialTokens.end()) {
      continue;
    }
    model.vocab.push_back(ranked[i]->surface);
  }
  return model;
}

TokenizerModel TrainBpeMorph(std::span<const Document> corpus,
                             std::size_t vocab_size, const CliticTable& clitics,
                             const NormalizerConfig& normalizer,
                             unsigned threads, TrainStats* stats) {
  TrainOptions options;
  options.kind = TokenizerKind::kBpeMorph;
  options.vocab_size = vocab_size;
  options.normalizer = normalizer;
  options.clitics = clitics;
  options.threads = threads;
  return Train(corpus, options, stats);
}

TokenizerModel TrainFromPreTokens(std::span<const PreToken> pretokens,
                                  const TrainOptions& options,
                                  TrainStats* stats) {
  options.normalizer.Validate();
  TokenizerModel model;
  switch (options.kind) {
    case TokenizerKind::kBpe:
    case TokenizerKind::kBpeMorph:
      model = TrainBpe(pretokens, options.vocab_size, stats);
      break;
    case TokenizerKind::kWordPiece:
      model = TrainWordPiece(pretokens, options.vocab_size, stats);
      break;
    case TokenizerKind::kWordLevel:
      model = TrainWordLevel(pretokens, options.vocab_size);
      break;
  }
  model.kind = options.kind;
  model.normalizer = options.normalizer;
  if (options.kind == TokenizerKind::kBpeMorph) {
    options.clitics.Validate();
    model.clitic_table = options.clitics;
  }
  return model;
}

TokenizerModel Train(std::span<const Document> corpus,
                     const TrainOptions& options, TrainStats* stats) {
  const std::vector<PreToken> pretokens =
      CountPreTokens(corpus, options.kind, options.normalizer, options.clitics,
                     options.threads);
  return TrainFromPreTokens(pretokens, options, stats);
}

}  // namespace arabtok
