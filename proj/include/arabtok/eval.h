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

// Tokenizer comparison metrics: token-to-word ratio (fertility), [UNK]
// rate, word coverage and throughput, over a grid of kinds and sizes.

#ifndef ARABTOK_EVAL_H_
#define ARABTOK_EVAL_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "arabtok/corpus.h"
#include "arabtok/model.h"
#include "arabtok/tokenizer.h"
#include "arabtok/trainer.h"
#include "json.hpp"

namespace arabtok {

class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CorpusMetrics {
  std::uint64_t tokens = 0;
  std::uint64_t unk_tokens = 0;
  std::uint64_t words = 0;
  std::uint64_t covered_words = 0;  // words encoded without any [UNK]
  double seconds = 0.0;

  double token_to_word() const;
  double unk_rate() const;
  double coverage() const;
  double words_per_sec() const;
};

// Single-threaded pass over the corpus. Throws EvalError when the corpus
// has no words.
CorpusMetrics MeasureCorpus(const Tokenizer& tokenizer,
                            std::span<const Document> corpus);

// Total tokens over total words; [UNK] counts as one token.
double TokenToWordRatio(const TokenizerModel& model,
                        std::span<const Document> corpus);
// [UNK] tokens over all tokens.
double UnkRate(const TokenizerModel& model, std::span<const Document> corpus);

struct MetricsRow {
  TokenizerKind kind = TokenizerKind::kBpe;
  std::size_t vocab_size = 0;
  double token_to_word = 0.0;
  double unk_rate = 0.0;
  double coverage = 0.0;
  double words_per_sec = 0.0;
  std::uint64_t corpus_words = 0;
};

MetricsRow MakeRow(TokenizerKind kind, std::size_t vocab_size,
                   const CorpusMetrics& m);

struct ComparisonReport {
  std::string corpus_id;
  std::vector<MetricsRow> rows;
  // (max - min) / mean of token_to_word across sizes, per kind.
  std::map<std::string, double> spread;

  const MetricsRow* Find(TokenizerKind kind, std::size_t vocab_size) const;
};

double RelativeSpread(std::span<const double> values);

inline constexpr std::array<std::size_t, 3> kDefaultVocabSizes = {16000, 28000,
                                                                  44000};
inline constexpr double kHeldOutFraction = 0.10;

// Training part and held-out tail (last 10% by order, at least one doc).
struct CorpusSplit {
  std::span<const Document> train;
  std::span<const Document> held_out;
};
CorpusSplit SplitHeldOut(std::span<const Document> corpus);

struct GridConfig {
  std::vector<TokenizerKind> kinds{kAllKinds.begin(), kAllKinds.end()};
  std::vector<std::size_t> sizes{kDefaultVocabSizes.begin(),
                                 kDefaultVocabSizes.end()};
  NormalizerConfig normalizer;
  CliticTable clitics = CliticTable::Default();
  unsigned threads = 1;
  // When set, models are stored as <cache_dir>/<kind>-<size>-<key>.json and
  // reused when present.
  std::optional<std::filesystem::path> cache_dir;
  // Report words_per_sec as 0 so reports are byte-stable.
  bool measure_throughput = true;
  std::string corpus_id;
  std::function<void(const std::string&)> log;
};

// Trains every (kind, size) on the training split and measures the
// held-out split. Training failures are rethrown as EvalError naming the
// grid cell.
ComparisonReport CompareGrid(std::span<const Document> corpus,
                             const GridConfig& config);

// Path a grid model is cached under; the key covers corpus content and
// configuration.
std::filesystem::path GridModelPath(const std::filesystem::path& cache_dir,
                                    TokenizerKind kind, std::size_t size,
                                    const std::string& key);
std::string GridCacheKey(std::span<const Document> train,
                         const GridConfig& config);

inline constexpr std::string_view kCsvHeader =
    "kind,vocab_size,token_to_word,unk_rate,coverage,words_per_sec,"
    "corpus_words";

std::string ReportCsv(const ComparisonReport& report);
nlohmann::json ReportJson(const ComparisonReport& report);
// kind,vocab_size,metric,value lines for external plotting.
std::string ReportLongCsv(const ComparisonReport& report);

struct RoundTripMismatch {
  std::string doc_id;
  std::string expected;
  std::string decoded;
  // Differences explained by [UNK] substitution alone.
  bool unk_attributable = false;
  // Expected words replaced by [UNK] (whole-word replacements only).
  std::vector<std::string> unk_words;
};

struct RoundTripReport {
  std::size_t checked = 0;
  std::size_t exact = 0;
  std::size_t unk_attributable = 0;
  std::vector<RoundTripMismatch> mismatches;  // capped at max_examples

  nlohmann::json ToJson() const;
};

// Samples min(sample_n, |corpus|) documents without replacement using a
// seeded generator, and checks decode(encode(d)) == normalize(d).
RoundTripReport RoundTripAudit(const Tokenizer& tokenizer,
                               std::span<const Document> corpus,
                               std::size_t sample_n, std::uint64_t seed,
                               std::size_t max_examples = 20);

// Deterministic sample of indices in [0, n), sorted ascending.
std::vector<std::size_t> SampleIndices(std::size_t n, std::size_t k,
                                       std::uint64_t seed);

// Whether `decoded` equals `expected` once each "[UNK]" may stand for any
// non-empty run of characters (spaces ignored on both sides).
bool MatchesWithUnk(std::string_view expected, std::string_view decoded);

}  // namespace arabtok

#endif  // ARABTOK_EVAL_H_
