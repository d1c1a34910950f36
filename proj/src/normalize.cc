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

#include "arabtok/normalize.h"

#include <array>
#include <stdexcept>
#include <utility>

#include "arabtok/unicode.h"

namespace arabtok {
namespace {

using unicode::DecodeNext;

constexpr char32_t kTatweel = 0x0640;
constexpr int kMaxNormalizePasses = 8;

bool IsAsciiAlpha(char32_t c) {
  return (c >= U'a' && c <= U'z') || (c >= U'A' && c <= U'Z');
}
bool IsAsciiAlnum(char32_t c) {
  return IsAsciiAlpha(c) || (c >= U'0' && c <= U'9');
}
bool IsSchemeChar(char32_t c) {
  return IsAsciiAlnum(c) || c == U'+' || c == U'.' || c == U'-';
}
bool IsEmailLocalChar(char32_t c) {
  return IsAsciiAlnum(c) || c == U'.' || c == U'_' || c == U'%' ||
         c == U'+' || c == U'-';
}
bool IsDomainChar(char32_t c) {
  return IsAsciiAlnum(c) || c == U'.' || c == U'-';
}
bool IsMentionChar(char32_t c) {
  return unicode::IsLetter(c) || unicode::IsDigit(c) || c == U'_';
}

// Codepoint-level filter helper shared by the single-class deletions.
template <typename Keep>
std::string FilterCodepoints(std::string_view text, Keep keep) {
  std::string out;
  out.reserve(text.size());
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t start = pos;
    const char32_t cp = DecodeNext(text, &pos);
    if (keep(cp)) out.append(text.substr(start, pos - start));
  }
  return out;
}

bool StartsWithAt(const std::u32string& s, std::size_t i,
                  std::u32string_view needle) {
  return s.size() >= i + needle.size() &&
         std::u32string_view(s).substr(i, needle.size()) == needle;
}

bool StartsWithWwwAt(const std::u32string& s, std::size_t i) {
  if (s.size() < i + 5) return false;
  for (std::size_t k = 0; k < 3; ++k) {
    if (s[i + k] != U'w' && s[i + k] != U'W') return false;
  }
  return s[i + 3] == U'.' && !unicode::IsWhitespace(s[i + 4]);
}

std::size_t SkipToWhitespace(const std::u32string& s, std::size_t i) {
  while (i < s.size() && !unicode::IsWhitespace(s[i])) ++i;
  return i;
}

std::u32string ReplaceUrls(const std::u32string& s,
                           const std::u32string& placeholder) {
  std::u32string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    // scheme://rest
    if (IsAsciiAlpha(s[i]) && (i == 0 || !IsSchemeChar(s[i - 1]))) {
      std::size_t j = i;
      while (j < s.size() && IsSchemeChar(s[j])) ++j;
      if (StartsWithAt(s, j, U"://") && j + 3 < s.size() &&
          !unicode::IsWhitespace(s[j + 3])) {
        out += placeholder;
        i = SkipToWhitespace(s, j + 3);
        continue;
      }
    }
    if (StartsWithWwwAt(s, i) && (i == 0 || !IsAsciiAlnum(s[i - 1]))) {
      out += placeholder;
      i = SkipToWhitespace(s, i);
      continue;
    }
    out.push_back(s[i++]);
  }
  return out;
}

std::u32string ReplaceEmails(const std::u32string& s,
                             const std::u32string& placeholder) {
  std::u32string out;
  out.reserve(s.size());
  std::size_t copied = 0;  // s[0, copied) already emitted or consumed
  for (std::size_t at = 0; at < s.size(); ++at) {
    if (s[at] != U'@' || at < copied) continue;
    std::size_t begin = at;
    while (begin > copied && IsEmailLocalChar(s[begin - 1])) --begin;
    if (begin == at) continue;
    std::size_t end = at + 1;
    while (end < s.size() && IsDomainChar(s[end])) ++end;
    while (end > at + 1 && (s[end - 1] == U'.' || s[end - 1] == U'-')) --end;
    // Domain must end in ".tld" with at least two letters.
    std::size_t tld = end;
    while (tld > at + 1 && IsAsciiAlpha(s[tld - 1])) --tld;
    if (end - tld < 2 || tld <= at + 2 || s[tld - 1] != U'.') continue;
    out.append(s, copied, begin - copied);
    out += placeholder;
    copied = end;
    at = end - 1;
  }
  out.append(s, copied, std::u32string::npos);
  return out;
}

std::u32string ReplaceMentions(const std::u32string& s,
                               const std::u32string& placeholder) {
  std::u32string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] == U'@' && i + 1 < s.size() && IsMentionChar(s[i + 1])) {
      std::size_t j = i + 1;
      while (j < s.size() && IsMentionChar(s[j])) ++j;
      out += placeholder;
      i = j;
      continue;
    }
    out.push_back(s[i++]);
  }
  return out;
}

struct Entity {
  std::string_view name;
  char32_t value;
};
constexpr std::array<Entity, 5> kEntities = {{
    {"&amp;", U'&'},
    {"&lt;", U'<'},
    {"&gt;", U'>'},
    {"&quot;", U'"'},
    {"&nbsp;", 0x00A0},
}};

std::string StripTagsOnce(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == '<') {
      const std::size_t close = text.find('>', i + 1);
      if (close != std::string_view::npos) {
        i = close + 1;
        continue;
      }
    }
    out.push_back(text[i++]);
  }
  return out;
}

std::string DecodeEntitiesOnce(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == '&') {
      bool matched = false;
      for (const Entity& e : kEntities) {
        if (text.substr(i, e.name.size()) == e.name) {
          unicode::AppendUtf8(e.value, &out);
          i += e.name.size();
          matched = true;
          break;
        }
      }
      if (matched) continue;
    }
    out.push_back(text[i++]);
  }
  return out;
}

bool HasWhitespace(std::string_view s) {
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (unicode::IsWhitespace(DecodeNext(s, &pos))) return true;
  }
  return false;
}

std::string NormalizeOnce(std::string_view text, const NormalizerConfig& cfg,
                          const Placeholders& ph) {
  std::string s(text);
  if (cfg.strip_markup) s = StripMarkup(s);
  if (cfg.replace_urls || cfg.replace_emails || cfg.replace_mentions) {
    std::u32string cps = unicode::ToCodepoints(s);
    if (cfg.replace_urls) cps = ReplaceUrls(cps, unicode::ToCodepoints(ph.url));
    if (cfg.replace_emails)
      cps = ReplaceEmails(cps, unicode::ToCodepoints(ph.email));
    if (cfg.replace_mentions)
      cps = ReplaceMentions(cps, unicode::ToCodepoints(ph.mention));
    s = unicode::FromCodepoints(cps);
  }
  if (cfg.remove_tatweel) s = RemoveTatweel(s);
  if (cfg.remove_diacritics) s = RemoveDiacritics(s);
  if (cfg.map_digits) s = MapDigits(s);
  if (cfg.collapse_repeats) s = CollapseRepeats(s, cfg.repeat_cap);
  return CanonicalizeWhitespace(s);
}

}  // namespace

void NormalizerConfig::Validate() const {
  if (repeat_cap < 1) {
    throw std::invalid_argument("repeat_cap must be >= 1");
  }
  for (const std::string* p :
       {&placeholders.url, &placeholders.mention, &placeholders.email}) {
    if (p->empty() || HasWhitespace(*p) ||
        p->find_first_of("<>&@") != std::string::npos) {
      throw std::invalid_argument("invalid placeholder token: '" + *p + "'");
    }
  }
}

NormalizerConfig NormalizerConfig::AllOff() {
  NormalizerConfig cfg;
  cfg.strip_markup = false;
  cfg.replace_urls = false;
  cfg.replace_mentions = false;
  cfg.replace_emails = false;
  cfg.remove_tatweel = false;
  cfg.remove_diacritics = false;
  cfg.map_digits = false;
  cfg.collapse_repeats = false;
  return cfg;
}

void to_json(nlohmann::json& j, const NormalizerConfig& cfg) {
  j = nlohmann::json{
      {"strip_markup", cfg.strip_markup},
      {"replace_urls", cfg.replace_urls},
      {"replace_mentions", cfg.replace_mentions},
      {"replace_emails", cfg.replace_emails},
      {"remove_tatweel", cfg.remove_tatweel},
      {"remove_diacritics", cfg.remove_diacritics},
      {"map_digits", cfg.map_digits},
      {"collapse_repeats", cfg.collapse_repeats},
      {"repeat_cap", cfg.repeat_cap},
      {"placeholders",
       {{"url", cfg.placeholders.url},
        {"mention", cfg.placeholders.mention},
        {"email", cfg.placeholders.email}}},
  };
}

void from_json(const nlohmann::json& j, NormalizerConfig& cfg) {
  if (!j.is_object()) throw std::invalid_argument("normalizer must be object");
  NormalizerConfig out;
  for (const auto& [key, value] : j.items()) {
    if (key == "strip_markup") out.strip_markup = value.get<bool>();
    else if (key == "replace_urls") out.replace_urls = value.get<bool>();
    else if (key == "replace_mentions") out.replace_mentions = value.get<bool>();
    else if (key == "replace_emails") out.replace_emails = value.get<bool>();
    else if (key == "remove_tatweel") out.remove_tatweel = value.get<bool>();
    else if (key == "remove_diacritics") out.remove_diacritics = value.get<bool>();
    else if (key == "map_digits") out.map_digits = value.get<bool>();
    else if (key == "collapse_repeats") out.collapse_repeats = value.get<bool>();
    else if (key == "repeat_cap") out.repeat_cap = value.get<int>();
    else if (key == "placeholders") {
      out.placeholders.url = value.value("url", out.placeholders.url);
      out.placeholders.mention =
          value.value("mention", out.placeholders.mention);
      out.placeholders.email = value.value("email", out.placeholders.email);
    } else {
      throw std::invalid_argument("unknown normalizer field: " + key);
    }
  }
  out.Validate();
  cfg = std::move(out);
}

std::string RemoveTatweel(std::string_view text) {
  return FilterCodepoints(text, [](char32_t cp) { return cp != kTatweel; });
}

std::string RemoveDiacritics(std::string_view text) {
  return FilterCodepoints(text, [](char32_t cp) {
    return !((cp >= 0x064B && cp <= 0x0652) || cp == 0x0670);
  });
}

std::string MapDigits(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t start = pos;
    const char32_t cp = DecodeNext(text, &pos);
    if (cp >= 0x0660 && cp <= 0x0669) {
      out.push_back(static_cast<char>('0' + (cp - 0x0660)));
    } else if (cp >= 0x06F0 && cp <= 0x06F9) {
      out.push_back(static_cast<char>('0' + (cp - 0x06F0)));
    } else {
      out.append(text.substr(start, pos - start));
    }
  }
  return out;
}

std::string ReplaceEntities(std::string_view text,
                            const Placeholders& placeholders) {
  std::u32string cps = unicode::ToCodepoints(text);
  cps = ReplaceUrls(cps, unicode::ToCodepoints(placeholders.url));
  cps = ReplaceEmails(cps, unicode::ToCodepoints(placeholders.email));
  cps = ReplaceMentions(cps, unicode::ToCodepoints(placeholders.mention));
  return unicode::FromCodepoints(cps);
}

std::string CollapseRepeats(std::string_view text, int cap) {
  if (cap < 1) throw std::invalid_argument("repeat cap must be >= 1");
  std::string out;
  out.reserve(text.size());
  std::size_t pos = 0;
  char32_t prev = 0;
  int run = 0;
  while (pos < text.size()) {
    const std::size_t start = pos;
    const char32_t cp = DecodeNext(text, &pos);
    run = (run > 0 && cp == prev) ? run + 1 : 1;
    prev = cp;
    if (run > cap && !unicode::IsDigit(cp)) continue;
    out.append(text.substr(start, pos - start));
  }
  return out;
}

std::string StripMarkup(std::string_view text) {
  std::string cur(text);
  while (true) {
    std::string next = DecodeEntitiesOnce(StripTagsOnce(cur));
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

std::string CanonicalizeWhitespace(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::string_view word : unicode::SplitWhitespace(text)) {
    if (!out.empty()) out.push_back(' ');
    out.append(word);
  }
  return out;
}

std::string Normalize(std::string_view text, const NormalizerConfig& cfg) {
  return Normalize(text, cfg, cfg.placeholders);
}

std::string Normalize(std::string_view text, const NormalizerConfig& cfg,
                      const Placeholders& placeholders) {
  std::string cur = NormalizeOnce(text, cfg, placeholders);
  for (int pass = 1; pass < kMaxNormalizePasses; ++pass) {
    std::string next = NormalizeOnce(cur, cfg, placeholders);
    if (next == cur) break;
    cur = std::move(next);
  }
  return cur;
}

}  // namespace arabtok
