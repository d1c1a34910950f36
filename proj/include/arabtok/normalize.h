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

// Arabic text cleaning. Every transform is a pure function of its input;
// Normalize() chains the enabled ones in a fixed order.

#ifndef ARABTOK_NORMALIZE_H_
#define ARABTOK_NORMALIZE_H_

#include <string>
#include <string_view>

#include "json.hpp"

namespace arabtok {

struct Placeholders {
  std::string url = "[URL]";
  std::string mention = "[USER]";
  std::string email = "[EMAIL]";

  bool operator==(const Placeholders&) const = default;
};

struct NormalizerConfig {
  bool strip_markup = true;
  bool replace_urls = true;
  bool replace_mentions = true;
  bool replace_emails = true;
  bool remove_tatweel = true;
  bool remove_diacritics = true;
  bool map_digits = true;
  bool collapse_repeats = true;
  int repeat_cap = 2;
  Placeholders placeholders;

  // Throws std::invalid_argument on repeat_cap < 1 or a placeholder that is
  // empty, contains whitespace, or contains markup characters.
  void Validate() const;

  // Every transform disabled; only whitespace canonicalization remains.
  static NormalizerConfig AllOff();

  bool operator==(const NormalizerConfig&) const = default;
};

void to_json(nlohmann::json& j, const NormalizerConfig& cfg);
// Missing fields keep their defaults; unknown fields are rejected.
void from_json(const nlohmann::json& j, NormalizerConfig& cfg);

std::string RemoveTatweel(std::string_view text);

// Deletes U+064B..U+0652 and U+0670.
std::string RemoveDiacritics(std::string_view text);

// Arabic-Indic and Extended Arabic-Indic digits to ASCII.
std::string MapDigits(std::string_view text);

// URLs, then emails, then mentions, each replaced by its placeholder.
std::string ReplaceEntities(std::string_view text,
                            const Placeholders& placeholders);

// Shortens runs of one repeated non-digit codepoint to `cap`.
std::string CollapseRepeats(std::string_view text, int cap);

// Deletes <...> spans and decodes &amp; &lt; &gt; &quot; &nbsp;. Repeats
// until nothing changes so the result contains no decodable entity and no
// complete tag.
std::string StripMarkup(std::string_view text);

// Runs of whitespace to one ASCII space, trimmed.
std::string CanonicalizeWhitespace(std::string_view text);

// strip_markup, replace_entities, remove_tatweel, remove_diacritics,
// map_digits, collapse_repeats, whitespace. The chain is re-applied until
// it reaches a fixed point, so Normalize is idempotent.
std::string Normalize(std::string_view text, const NormalizerConfig& cfg);
std::string Normalize(std::string_view text, const NormalizerConfig& cfg,
                      const Placeholders& placeholders);

}  // namespace arabtok

#endif  // ARABTOK_NORMALIZE_H_
