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

#include "arabtok/morphseg.h"

#include <fstream>
#include <optional>
#include <stdexcept>
#include <utility>

#include "arabtok/unicode.h"

namespace arabtok {
namespace {

using Slot = ProcliticSlot;

std::string_view SlotName(Slot slot) {
  switch (slot) {
    case Slot::kConjunction: return "conjunction";
    case Slot::kPreposition: return "preposition";
    case Slot::kDeterminer: return "determiner";
  }
  return "conjunction";
}

Slot ParseSlot(std::string_view name) {
  if (name == "conjunction") return Slot::kConjunction;
  if (name == "preposition") return Slot::kPreposition;
  if (name == "determiner") return Slot::kDeterminer;
  throw std::invalid_argument("unknown proclitic slot: " + std::string(name));
}

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

bool StartsWith(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

bool IsTableForm(const CliticTable& table, std::string_view form) {
  for (const Proclitic& p : table.proclitics) {
    if (p.form == form) return true;
  }
  return false;
}

// Splits a compound proclitic ("وال") into shorter table forms ("و", "ال"),
// preferring the shortest leading piece. Atomic forms come back unchanged.
std::vector<std::string> Decompose(const CliticTable& table,
                                   std::string_view form) {
  const std::vector<std::string> chars = unicode::SplitChars(form);
  std::string prefix;
  for (std::size_t k = 0; k + 1 < chars.size(); ++k) {
    prefix += chars[k];
    const std::string_view rest = form.substr(prefix.size());
    if (!IsTableForm(table, prefix)) continue;
    if (IsTableForm(table, rest)) return {prefix, std::string(rest)};
    std::vector<std::string> tail = Decompose(table, rest);
    if (tail.size() > 1) {
      tail.insert(tail.begin(), prefix);
      return tail;
    }
  }
  return {std::string(form)};
}

std::size_t Letters(std::string_view s) { return unicode::CodepointLength(s); }

}  // namespace

CliticTable CliticTable::Default() {
  CliticTable t;
  // Compounds ending in the determiner cannot be followed by more clitics.
  t.proclitics = {
      {"وال", false, Slot::kConjunction, 2},
      {"فال", false, Slot::kConjunction, 2},
      {"بال", false, Slot::kPreposition, 2},
      {"كال", false, Slot::kPreposition, 2},
      {"لل", false, Slot::kPreposition, 2},
      {"ال", false, Slot::kDeterminer, 2},
      {"و", true, Slot::kConjunction, 3},
      {"ف", true, Slot::kConjunction, 3},
      // Bare prepositions are also frequent root-initial letters.
      {"ب", true, Slot::kPreposition, 5},
      {"ك", true, Slot::kPreposition, 5},
      {"ل", true, Slot::kPreposition, 5},
  };
  t.enclitics = {
      {"كما", 2}, {"كم", 2}, {"كن", 2}, {"هما", 2}, {"هم", 2}, {"هن", 2},
      {"ها", 2},  {"نا", 2}, {"ني", 3}, {"ه", 3},   {"ك", 3},  {"ي", 3},
  };
  return t;
}

void CliticTable::Validate() const {
  for (const Proclitic& p : proclitics) {
    if (!unicode::IsArabicWord(p.form)) {
      throw std::invalid_argument("proclitic must be Arabic letters: '" +
                                  p.form + "'");
    }
    if (p.min_stem < 2) throw std::invalid_argument("min_stem must be >= 2");
  }
  for (const Enclitic& e : enclitics) {
    if (!unicode::IsArabicWord(e.form)) {
      throw std::invalid_argument("enclitic must be Arabic letters: '" +
                                  e.form + "'");
    }
    if (e.min_stem < 2) throw std::invalid_argument("min_stem must be >= 2");
  }
}

void to_json(nlohmann::json& j, const CliticTable& table) {
  nlohmann::json pro = nlohmann::json::array();
  for (const Proclitic& p : table.proclitics) {
    pro.push_back({{"form", p.form},
                   {"may_stack", p.may_stack},
                   {"slot", SlotName(p.slot)},
                   {"min_stem", p.min_stem}});
  }
  nlohmann::json enc = nlohmann::json::array();
  for (const Enclitic& e : table.enclitics) {
    enc.push_back({{"form", e.form}, {"min_stem", e.min_stem}});
  }
  j = nlohmann::json{{"proclitics", pro}, {"enclitics", enc}};
}

void from_json(const nlohmann::json& j, CliticTable& table) {
  if (!j.is_object()) throw std::invalid_argument("clitic table must be object");
  CliticTable out;
  for (const nlohmann::json& item : j.value("proclitics", nlohmann::json::array())) {
    Proclitic p;
    if (item.is_string()) {
      p.form = item.get<std::string>();
    } else {
      p.form = item.at("form").get<std::string>();
      p.may_stack = item.value("may_stack", p.may_stack);
      if (item.contains("slot")) p.slot = ParseSlot(item["slot"].get<std::string>());
      p.min_stem = item.value("min_stem", p.min_stem);
    }
    out.proclitics.push_back(std::move(p));
  }
  for (const nlohmann::json& item : j.value("enclitics", nlohmann::json::array())) {
    Enclitic e;
    if (item.is_string()) {
      e.form = item.get<std::string>();
    } else {
      e.form = item.at("form").get<std::string>();
      e.min_stem = item.value("min_stem", e.min_stem);
    }
    out.enclitics.push_back(std::move(e));
  }
  out.Validate();
  table = std::move(out);
}

CliticTable LoadCliticTable(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open clitic table: " + path.string());
  return nlohmann::json::parse(in).get<CliticTable>();
}

const std::string& Segmentation::stem() const {
  for (const std::string& s : segments) {
    if (!IsProcliticToken(s) && !IsEncliticToken(s)) return s;
  }
  return word;
}

Segmentation SegmentWord(std::string_view word, const CliticTable& table) {
  Segmentation seg{std::string(word), {}};
  if (!unicode::IsArabicWord(word)) {
    seg.segments.emplace_back(word);
    return seg;
  }

  std::string_view rest = word;
  std::vector<std::string> pre;
  std::optional<Slot> last_slot;
  bool can_stack = true;
  while (can_stack && pre.size() < kMaxStackedProclitics) {
    bool stripped = false;
    for (const Proclitic& p : table.proclitics) {
      if (last_slot && p.slot <= *last_slot) continue;
      if (!StartsWith(rest, p.form)) continue;
      const std::string_view after = rest.substr(p.form.size());
      if (Letters(after) < static_cast<std::size_t>(p.min_stem)) continue;
      std::vector<std::string> atoms = Decompose(table, p.form);
      if (pre.size() + atoms.size() > kMaxStackedProclitics) continue;
      for (std::string& a : atoms) pre.push_back(std::move(a));
      rest = after;
      last_slot = p.slot;
      can_stack = p.may_stack;
      stripped = true;
      break;
    }
    if (!stripped) break;
  }

  std::string enclitic;
  for (const Enclitic& e : table.enclitics) {
    if (!EndsWith(rest, e.form)) continue;
    const std::string_view stem = rest.substr(0, rest.size() - e.form.size());
    if (Letters(stem) < static_cast<std::size_t>(e.min_stem)) continue;
    enclitic = e.form;
    rest = stem;
    break;
  }

  for (const std::string& p : pre) seg.segments.push_back(p + kCliticMarker);
  seg.segments.emplace_back(rest);
  if (!enclitic.empty()) seg.segments.push_back(kCliticMarker + enclitic);
  return seg;
}

std::string SegmentText(std::string_view text, const CliticTable& table) {
  std::string out;
  out.reserve(text.size() + text.size() / 4);
  for (std::string_view word : unicode::SplitWhitespace(text)) {
    const Segmentation seg = SegmentWord(word, table);
    for (const std::string& s : seg.segments) {
      if (!out.empty()) out.push_back(' ');
      out += s;
    }
  }
  return out;
}

bool IsProcliticToken(std::string_view token) {
  return token.size() > 1 && token.back() == kCliticMarker &&
         unicode::IsArabicWord(token.substr(0, token.size() - 1));
}

bool IsEncliticToken(std::string_view token) {
  return token.size() > 1 && token.front() == kCliticMarker &&
         unicode::IsArabicWord(token.substr(1));
}

DesegmentResult DesegmentTextChecked(std::string_view segmented) {
  DesegmentResult result;
  std::vector<std::string> words;
  std::string pending;  // proclitic bodies waiting for their host
  for (std::string_view token : unicode::SplitWhitespace(segmented)) {
    if (IsProcliticToken(token)) {
      pending.append(token.substr(0, token.size() - 1));
      continue;
    }
    if (IsEncliticToken(token)) {
      const std::string_view body = token.substr(1);
      if (!pending.empty()) {
        words.push_back(pending + std::string(body));
        pending.clear();
      } else if (!words.empty()) {
        words.back().append(body);
      } else {
        ++result.dangling_markers;
        words.emplace_back(body);
      }
      continue;
    }
    words.push_back(pending + std::string(token));
    pending.clear();
  }
  if (!pending.empty()) {
    ++result.dangling_markers;
    words.push_back(std::move(pending));
  }
  for (const std::string& w : words) {
    if (!result.text.empty()) result.text.push_back(' ');
    result.text += w;
  }
  return result;
}

std::string DesegmentText(std::string_view segmented) {
  return DesegmentTextChecked(segmented).text;
}

}  // namespace arabtok
