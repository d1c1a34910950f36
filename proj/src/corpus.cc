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

#include "arabtok/corpus.h"

#include <utility>

#include "arabtok/unicode.h"

namespace arabtok {
namespace {

bool IsBlankLine(std::string_view line) {
  return unicode::SplitWhitespace(line).empty();
}

}  // namespace

CorpusFormat ParseCorpusFormat(std::string_view name) {
  if (name == "plain_lines" || name == "plain") return CorpusFormat::kPlainLines;
  if (name == "jsonl") return CorpusFormat::kJsonl;
  throw std::invalid_argument("unknown corpus format: " + std::string(name));
}

std::string_view CorpusFormatName(CorpusFormat format) {
  return format == CorpusFormat::kJsonl ? "jsonl" : "plain_lines";
}

DocumentReader::DocumentReader(const std::filesystem::path& path,
                               CorpusFormat format)
    : in_(path, std::ios::binary), format_(format) {
  if (!in_) throw CorpusError("cannot open corpus: " + path.string());
}

bool DocumentReader::Next(Document* doc) {
  return format_ == CorpusFormat::kJsonl ? NextJsonl(doc) : NextPlain(doc);
}

bool DocumentReader::NextPlain(Document* doc) {
  std::string line;
  std::string text;
  bool have_text = false;
  while (std::getline(in_, line)) {
    ++line_number_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (IsBlankLine(line)) {
      if (have_text) break;
      continue;
    }
    if (have_text) text.push_back('\n');
    text += line;
    have_text = true;
  }
  if (!have_text) return false;
  doc->id = std::to_string(next_id_++);
  doc->text = unicode::Sanitize(text);
  doc->source.reset();
  return true;
}

bool DocumentReader::NextJsonl(Document* doc) {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_number_;
    if (IsBlankLine(line)) continue;
    const std::uint64_t index = next_id_++;
    nlohmann::json record =
        nlohmann::json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (record.is_discarded() || !record.is_object() ||
        !record.contains("text") || !record["text"].is_string()) {
      ++skipped_;
      continue;
    }
    doc->text = record["text"].get<std::string>();
    const auto id = record.find("id");
    if (id != record.end() && id->is_string()) {
      doc->id = id->get<std::string>();
    } else if (id != record.end() && id->is_number_integer()) {
      doc->id = std::to_string(id->get<long long>());
    } else {
      doc->id = std::to_string(index);
    }
    const auto source = record.find("source");
    if (source != record.end() && source->is_string()) {
      doc->source = source->get<std::string>();
    } else {
      doc->source.reset();
    }
    return true;
  }
  return false;
}

LoadResult LoadDocuments(const std::filesystem::path& path,
                         CorpusFormat format) {
  DocumentReader reader(path, format);
  LoadResult result;
  Document doc;
  while (reader.Next(&doc)) result.documents.push_back(std::move(doc));
  result.skipped = reader.skipped();
  return result;
}

double ArabicRatio(std::string_view text) {
  std::uint64_t letters = 0;
  std::uint64_t arabic = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char32_t cp = unicode::DecodeNext(text, &pos);
    if (!unicode::IsLetter(cp)) continue;
    ++letters;
    if (unicode::InArabicBlocks(cp)) ++arabic;
  }
  return letters == 0 ? 0.0
                      : static_cast<double>(arabic) /
                            static_cast<double>(letters);
}

void FilterConfig::Validate() const {
  if (!(min_arabic_ratio >= 0.0 && min_arabic_ratio <= 1.0)) {
    throw std::invalid_argument("min_arabic_ratio must lie in [0, 1]");
  }
  if (max_mean_line_words && !(*max_mean_line_words >= 0.0)) {
    throw std::invalid_argument("max_mean_line_words must be >= 0");
  }
}

void to_json(nlohmann::json& j, const FilterConfig& cfg) {
  j = nlohmann::json{{"min_chars", cfg.min_chars},
                     {"min_words", cfg.min_words},
                     {"min_arabic_ratio", cfg.min_arabic_ratio}};
  j["max_mean_line_words"] = cfg.max_mean_line_words
                                 ? nlohmann::json(*cfg.max_mean_line_words)
                                 : nlohmann::json(nullptr);
}

void from_json(const nlohmann::json& j, FilterConfig& cfg) {
  FilterConfig out;
  for (const auto& [key, value] : j.items()) {
    if (key == "min_chars") out.min_chars = value.get<std::uint64_t>();
    else if (key == "min_words") out.min_words = value.get<std::uint64_t>();
    else if (key == "min_arabic_ratio") out.min_arabic_ratio = value.get<double>();
    else if (key == "max_mean_line_words") {
      if (value.is_null()) out.max_mean_line_words.reset();
      else out.max_mean_line_words = value.get<double>();
    } else {
      throw std::invalid_argument("unknown filter field: " + key);
    }
  }
  out.Validate();
  cfg = out;
}

std::string_view RejectReasonName(RejectReason reason) {
  switch (reason) {
    case RejectReason::kEmpty: return "empty";
    case RejectReason::kTooShort: return "too_short";
    case RejectReason::kLowArabicRatio: return "low_arabic_ratio";
    case RejectReason::kNavigationLike: return "navigation_like";
  }
  return "unknown";
}

FilterVerdict FilterDocument(const Document& doc, const FilterConfig& cfg) {
  const std::string_view text = doc.text;
  const std::size_t words = unicode::SplitWhitespace(text).size();
  if (words == 0) return FilterVerdict::Reject(RejectReason::kEmpty);
  if (unicode::CodepointLength(text) < cfg.min_chars || words < cfg.min_words) {
    return FilterVerdict::Reject(RejectReason::kTooShort);
  }
  if (ArabicRatio(text) < cfg.min_arabic_ratio) {
    return FilterVerdict::Reject(RejectReason::kLowArabicRatio);
  }
  if (cfg.max_mean_line_words) {
    std::size_t lines = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      if (!IsBlankLine(text.substr(start, end - start))) ++lines;
      start = end + 1;
    }
    const double mean =
        static_cast<double>(words) / static_cast<double>(lines);
    if (mean < *cfg.max_mean_line_words) {
      return FilterVerdict::Reject(RejectReason::kNavigationLike);
    }
  }
  return FilterVerdict::Keep();
}

void FilterSummary::Record(const FilterVerdict& verdict) {
  ++read;
  if (verdict.keep) {
    ++kept;
  } else {
    ++rejected_by_reason[std::string(RejectReasonName(*verdict.reason))];
  }
}

nlohmann::json FilterSummary::ToJson() const {
  nlohmann::json rejected = nlohmann::json::object();
  for (const auto& [reason, n] : rejected_by_reason) rejected[reason] = n;
  return {{"read", read},
          {"kept", kept},
          {"rejected_by_reason", rejected},
          {"skipped_malformed", skipped_malformed}};
}

nlohmann::json DocumentToJson(const Document& doc) {
  nlohmann::json j = {{"id", doc.id}, {"text", doc.text}};
  if (doc.source) j["source"] = *doc.source;
  return j;
}

void WriteJsonl(std::ostream& out, const std::vector<Document>& docs) {
  for (const Document& doc : docs) out << DocumentToJson(doc).dump() << '\n';
}

}  // namespace arabtok
