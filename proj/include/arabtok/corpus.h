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

// Document ingestion and document-level filtering.

#ifndef ARABTOK_CORPUS_H_
#define ARABTOK_CORPUS_H_

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace arabtok {

struct Document {
  std::string id;
  std::string text;
  std::optional<std::string> source;

  bool operator==(const Document&) const = default;
};

enum class CorpusFormat { kPlainLines, kJsonl };

CorpusFormat ParseCorpusFormat(std::string_view name);
std::string_view CorpusFormatName(CorpusFormat format);

class CorpusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Streams documents from one file in file order.
//
// plain_lines: documents are groups of non-empty lines separated by one or
// more blank lines; ids are "<n>" counting from 0.
// jsonl: one object per line with a string "text" field and optional "id"
// and "source". Malformed lines are skipped and counted.
class DocumentReader {
 public:
  DocumentReader(const std::filesystem::path& path, CorpusFormat format);

  // Returns false at end of input.
  bool Next(Document* doc);

  std::uint64_t skipped() const { return skipped_; }
  std::uint64_t line_number() const { return line_number_; }

 private:
  bool NextPlain(Document* doc);
  bool NextJsonl(Document* doc);

  std::ifstream in_;
  CorpusFormat format_;
  std::uint64_t next_id_ = 0;
  std::uint64_t skipped_ = 0;
  std::uint64_t line_number_ = 0;
};

struct LoadResult {
  std::vector<Document> documents;
  std::uint64_t skipped = 0;
};

// Throws CorpusError when the path cannot be opened.
LoadResult LoadDocuments(const std::filesystem::path& path,
                         CorpusFormat format);

// Arabic-block letters over all letters; 0 when the text has no letters.
double ArabicRatio(std::string_view text);

struct FilterConfig {
  std::uint64_t min_chars = 50;
  std::uint64_t min_words = 5;
  double min_arabic_ratio = 0.5;
  // Navigation pages are link lists with very short lines. Off by default.
  std::optional<double> max_mean_line_words;

  void Validate() const;
};

void to_json(nlohmann::json& j, const FilterConfig& cfg);
void from_json(const nlohmann::json& j, FilterConfig& cfg);

enum class RejectReason { kEmpty, kTooShort, kLowArabicRatio, kNavigationLike };

std::string_view RejectReasonName(RejectReason reason);

struct FilterVerdict {
  bool keep = true;
  std::optional<RejectReason> reason;

  static FilterVerdict Keep() { return {}; }
  static FilterVerdict Reject(RejectReason r) { return {false, r}; }
  bool operator==(const FilterVerdict&) const = default;
};

// Rules in order: empty, min_chars, min_words, min_arabic_ratio, then the
// navigation heuristic. First failure wins. Character counts are codepoints.
FilterVerdict FilterDocument(const Document& doc, const FilterConfig& cfg);

struct FilterSummary {
  std::uint64_t read = 0;
  std::uint64_t kept = 0;
  std::uint64_t skipped_malformed = 0;
  std::map<std::string, std::uint64_t> rejected_by_reason;

  void Record(const FilterVerdict& verdict);
  nlohmann::json ToJson() const;
};

nlohmann::json DocumentToJson(const Document& doc);
void WriteJsonl(std::ostream& out, const std::vector<Document>& docs);

}  // namespace arabtok

#endif  // ARABTOK_CORPUS_H_
