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

#include "arabtok/eval.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>
#include <unordered_map>

#include "arabtok/file_util.h"
#include "arabtok/normalize.h"
#include "arabtok/unicode.h"

namespace arabtok {
namespace {

std::string FormatDouble(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

double Ratio(std::uint64_t num, std::uint64_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

void Log(const GridConfig& config, const std::string& message) {
  if (config.log) config.log(message);
}

std::string StripSpaces(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c != ' ') out.push_back(c);
  }
  return out;
}

}  // namespace

double CorpusMetrics::token_to_word() const { return Ratio(tokens, words); }
double CorpusMetrics::unk_rate() const { return Ratio(unk_tokens, tokens); }
double CorpusMetrics::coverage() const { return Ratio(covered_words, words); }
double CorpusMetrics::words_per_sec() const {
  return seconds > 0.0 ? static_cast<double>(words) / seconds : 0.0;
}

CorpusMetrics MeasureCorpus(const Tokenizer& tokenizer,
                            std::span<const Document> corpus) {
  struct WordStats {
    std::uint32_t tokens;
    std::uint32_t unks;
  };
  std::unordered_map<std::string, WordStats> cache;
  CorpusMetrics m;
  std::vector<TokenId> ids;
  const auto start = std::chrono::steady_clock::now();
  for (const Document& doc : corpus) {
    const std::string text = Normalize(doc.text, tokenizer.model().normalizer);
    for (std::string_view word : unicode::SplitWhitespace(text)) {
      auto it = cache.find(std::string(word));
      if (it == cache.end()) {
        ids.clear();
        tokenizer.EncodeWord(word, &ids);
        const auto unks = static_cast<std::uint32_t>(
            std::count(ids.begin(), ids.end(), kUnkId));
        it = cache.emplace(std::string(word),
                           WordStats{static_cast<std::uint32_t>(ids.size()), unks})
                 .first;
      }
      m.tokens += it->second.tokens;
      m.unk_tokens += it->second.unks;
      ++m.words;
      if (it->second.unks == 0) ++m.covered_words;
    }
  }
  m.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            start)
                  .count();
  if (m.words == 0) throw EvalError("evaluation corpus contains no words");
  return m;
}

double TokenToWordRatio(const TokenizerModel& model,
                        std::span<const Document> corpus) {
  return MeasureCorpus(Tokenizer(model), corpus).token_to_word();
}

double UnkRate(const TokenizerModel& model, std::span<const Document> corpus) {
  return MeasureCorpus(Tokenizer(model), corpus).unk_rate();
}

MetricsRow MakeRow(TokenizerKind kind, std::size_t vocab_size,
                   const CorpusMetrics& m) {
  return {kind,         vocab_size,         m.token_to_word(),
          m.unk_rate(), m.coverage(),       m.words_per_sec(),
          m.words};
}

const MetricsRow* ComparisonReport::Find(TokenizerKind kind,
                                         std::size_t vocab_size) const {
  for (const MetricsRow& row : rows) {
    if (row.kind == kind && row.vocab_size == vocab_size) return &row;
  }
  return nullptr;
}

double RelativeSpread(std::span<const double> values) {
  if (values.empty()) return 0.0;
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  const double mean =
      std::accumulate(values.begin(), values.end(), 0.0) / values.size();
  return mean == 0.0 ? 0.0 : (*hi - *lo) / mean;
}

CorpusSplit SplitHeldOut(std::span<const Document> corpus) {
  if (corpus.size() < 2) return {corpus, corpus};
  std::size_t held = static_cast<std::size_t>(
      std::floor(static_cast<double>(corpus.size()) * kHeldOutFraction));
  held = std::max<std::size_t>(held, 1);
  return {corpus.first(corpus.size() - held), corpus.last(held)};
}

std::string GridCacheKey(std::span<const Document> train,
                         const GridConfig& config) {
  std::uint64_t h = Fnv1a64(nlohmann::json(config.normalizer).dump());
  h = Fnv1a64(nlohmann::json(config.clitics).dump(), h);
  for (const Document& doc : train) {
    h = Fnv1a64(doc.text, h);
    h = Fnv1a64(std::string_view("\x1e", 1), h);
  }
  return Hex64(h);
}

std::filesystem::path GridModelPath(const std::filesystem::path& cache_dir,
                                    TokenizerKind kind, std::size_t size,
                                    const std::string& key) {
  return cache_dir / (std::string(KindName(kind)) + "-" + std::to_string(size) +
                      "-" + key + ".json");
}

ComparisonReport CompareGrid(std::span<const Document> corpus,
                             const GridConfig& config) {
  if (config.sizes.empty()) throw EvalError("no vocabulary sizes requested");
  if (config.kinds.empty()) throw EvalError("no tokenizer kinds requested");
  const CorpusSplit split = SplitHeldOut(corpus);
  if (split.train.empty()) throw EvalError("empty corpus");

  std::string key;
  if (config.cache_dir) {
    std::filesystem::create_directories(*config.cache_dir);
    key = GridCacheKey(split.train, config);
  }

  // Pre-token counts are shared by every size; plain and segmented units
  // are counted at most once each.
  std::optional<std::vector<PreToken>> plain;
  std::optional<std::vector<PreToken>> segmented;
  const auto pretokens_for = [&](TokenizerKind kind) -> const std::vector<PreToken>& {
    auto& slot = kind == TokenizerKind::kBpeMorph ? segmented : plain;
    if (!slot) {
      Log(config, "counting pre-tokens for " + std::string(KindName(kind)));
      slot = CountPreTokens(split.train, kind, config.normalizer,
                            config.clitics, config.threads);
    }
    return *slot;
  };

  ComparisonReport report;
  report.corpus_id = config.corpus_id;
  for (TokenizerKind kind : config.kinds) {
    std::vector<double> ratios;
    for (std::size_t size : config.sizes) {
      const std::string cell =
          std::string(KindName(kind)) + "@" + std::to_string(size);
      TokenizerModel model;
      try {
        std::optional<std::filesystem::path> cached;
        if (config.cache_dir) cached = GridModelPath(*config.cache_dir, kind, size, key);
        if (cached && std::filesystem::exists(*cached)) {
          Log(config, "loading cached " + cell);
          model = LoadModel(*cached);
        } else {
          Log(config, "training " + cell);
          TrainOptions options;
          options.kind = kind;
          options.vocab_size = size;
          options.normalizer = config.normalizer;
          options.clitics = config.clitics;
          options.threads = config.threads;
          TrainStats stats;
          model = TrainFromPreTokens(pretokens_for(kind), options, &stats);
          for (const std::string& w : stats.warnings) Log(config, cell + ": " + w);
          if (cached) SaveModel(model, *cached);
        }
      } catch (const std::exception& e) {
        throw EvalError("grid cell " + cell + ": " + e.what());
      }
      const CorpusMetrics m = MeasureCorpus(Tokenizer(std::move(model)),
                                            split.held_out);
      MetricsRow row = MakeRow(kind, size, m);
      if (!config.measure_throughput) row.words_per_sec = 0.0;
      Log(config, cell + ": token_to_word=" + FormatDouble(row.token_to_word, 4) +
                      " unk_rate=" + FormatDouble(row.unk_rate, 4));
      ratios.push_back(row.token_to_word);
      report.rows.push_back(row);
    }
    report.spread[std::string(KindName(kind))] = RelativeSpread(ratios);
  }
  return report;
}

std::string ReportCsv(const ComparisonReport& report) {
  std::string out(kCsvHeader);
  out += "\n";
  for (const MetricsRow& r : report.rows) {
    out += std::string(KindName(r.kind)) + "," + std::to_string(r.vocab_size) +
           "," + FormatDouble(r.token_to_word, 6) + "," +
           FormatDouble(r.unk_rate, 6) + "," + FormatDouble(r.coverage, 6) +
           "," + FormatDouble(r.words_per_sec, 1) + "," +
           std::to_string(r.corpus_words) + "\n";
  }
  return out;
}

nlohmann::json ReportJson(const ComparisonReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const MetricsRow& r : report.rows) {
    rows.push_back({{"kind", KindName(r.kind)},
                    {"vocab_size", r.vocab_size},
                    {"token_to_word", r.token_to_word},
                    {"unk_rate", r.unk_rate},
                    {"coverage", r.coverage},
                    {"words_per_sec", r.words_per_sec},
                    {"corpus_words", r.corpus_words}});
  }
  return {{"corpus_id", report.corpus_id},
          {"rows", rows},
          {"spread", report.spread}};
}

std::string ReportLongCsv(const ComparisonReport& report) {
  std::string out = "kind,vocab_size,metric,value\n";
  for (const MetricsRow& r : report.rows) {
    const std::string prefix =
        std::string(KindName(r.kind)) + "," + std::to_string(r.vocab_size) + ",";
    out += prefix + "token_to_word," + FormatDouble(r.token_to_word, 6) + "\n";
    out += prefix + "unk_rate," + FormatDouble(r.unk_rate, 6) + "\n";
    out += prefix + "coverage," + FormatDouble(r.coverage, 6) + "\n";
  }
  return out;
}

nlohmann::json RoundTripReport::ToJson() const {
  nlohmann::json examples = nlohmann::json::array();
  for (const RoundTripMismatch& m : mismatches) {
    examples.push_back({{"id", m.doc_id},
                        {"expected", m.expected},
                        {"decoded", m.decoded},
                        {"unk_attributable", m.unk_attributable},
                        {"unk_words", m.unk_words}});
  }
  return {{"checked", checked},
          {"exact", exact},
          {"unk_attributable", unk_attributable},
          {"mismatches", examples}};
}

std::vector<std::size_t> SampleIndices(std::size_t n, std::size_t k,
                                       std::uint64_t seed) {
  k = std::min(k, n);
  std::vector<std::size_t> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  std::mt19937_64 rng(seed);
  // Partial Fisher-Yates; modulo keeps the sequence identical across
  // standard library implementations.
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng() % (n - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

bool MatchesWithUnk(std::string_view expected, std::string_view decoded) {
  constexpr std::string_view kUnk = "[UNK]";
  const std::string want = StripSpaces(expected);
  const std::string got = StripSpaces(decoded);
  std::vector<std::string_view> pieces;
  std::string_view rest = got;
  while (true) {
    const std::size_t at = rest.find(kUnk);
    pieces.push_back(rest.substr(0, at));
    if (at == std::string_view::npos) break;
    rest.remove_prefix(at + kUnk.size());
  }
  if (pieces.size() == 1) return want == got;
  const std::string_view head = pieces.front();
  const std::string_view tail = pieces.back();
  if (want.size() < head.size() + tail.size() + (pieces.size() - 1)) return false;
  if (want.compare(0, head.size(), head) != 0) return false;
  if (want.compare(want.size() - tail.size(), tail.size(), tail) != 0) return false;
  // Leftmost placement of the inner pieces, each gap at least one byte.
  std::size_t pos = head.size() + 1;
  const std::size_t limit = want.size() - tail.size();
  for (std::size_t i = 1; i + 1 < pieces.size(); ++i) {
    const std::size_t at = want.find(pieces[i], pos);
    if (at == std::string::npos || at + pieces[i].size() + 1 > limit) {
      return false;
    }
    pos = at + pieces[i].size() + 1;
  }
  return pos <= limit;
}

RoundTripReport RoundTripAudit(const Tokenizer& tokenizer,
                               std::span<const Document> corpus,
                               std::size_t sample_n, std::uint64_t seed,
                               std::size_t max_examples) {
  if (sample_n == 0) throw std::invalid_argument("sample_n must be >= 1");
  RoundTripReport report;
  for (std::size_t index : SampleIndices(corpus.size(), sample_n, seed)) {
    const Document& doc = corpus[index];
    const std::string expected = Normalize(doc.text, tokenizer.model().normalizer);
    const Encoding enc = tokenizer.EncodeNormalized(expected);
    const std::string decoded = tokenizer.Decode(enc.ids);
    ++report.checked;
    if (decoded == expected) {
      ++report.exact;
      continue;
    }
    RoundTripMismatch mismatch;
    mismatch.doc_id = doc.id;
    mismatch.unk_attributable = MatchesWithUnk(expected, decoded);
    if (mismatch.unk_attributable) ++report.unk_attributable;
    const auto want = unicode::SplitWhitespace(expected);
    const auto got = unicode::SplitWhitespace(decoded);
    if (want.size() == got.size()) {
      for (std::size_t i = 0; i < want.size(); ++i) {
        if (got[i] == "[UNK]" && want[i] != "[UNK]") {
          mismatch.unk_words.emplace_back(want[i]);
        }
      }
    }
    if (report.mismatches.size() < max_examples) {
      mismatch.expected = expected;
      mismatch.decoded = decoded;
      report.mismatches.push_back(std::move(mismatch));
    }
  }
  return report;
}

}  // namespace arabtok
