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

// Rule-based Arabic clitic segmentation.
//
// A word is split into proclitics, one stem and at most one enclitic.
// Proclitic segments carry a trailing '+' ("و+"), enclitic segments a
// leading '+' ("+ها"); the stem is bare. Removing the markers and
// concatenating the segments gives back the word.

#ifndef ARABTOK_MORPHSEG_H_
#define ARABTOK_MORPHSEG_H_

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace arabtok {

inline constexpr char kCliticMarker = '+';

// Stacking order of proclitics within one word.
enum class ProcliticSlot : int { kConjunction = 0, kPreposition = 1, kDeterminer = 2 };

struct Proclitic {
  std::string form;
  // Whether another proclitic of a later slot may follow this one.
  bool may_stack = false;
  ProcliticSlot slot = ProcliticSlot::kConjunction;
  // Letters that must remain after stripping (and after any enclitic).
  int min_stem = 2;

  bool operator==(const Proclitic&) const = default;
};

struct Enclitic {
  std::string form;
  int min_stem = 2;

  bool operator==(const Enclitic&) const = default;
};

// Entries are tried in list order; the default table lists longer forms
// first so the first match is the longest one.
struct CliticTable {
  std::vector<Proclitic> proclitics;
  std::vector<Enclitic> enclitics;

  static CliticTable Default();
  static CliticTable Empty() { return {}; }

  // Throws std::invalid_argument on empty or non-Arabic forms and on
  // min_stem < 2.
  void Validate() const;

  bool operator==(const CliticTable&) const = default;
};

void to_json(nlohmann::json& j, const CliticTable& table);
// Accepts entries either as objects or as bare form strings.
void from_json(const nlohmann::json& j, CliticTable& table);

CliticTable LoadCliticTable(const std::filesystem::path& path);

struct Segmentation {
  std::string word;
  std::vector<std::string> segments;

  // The bare segment.
  const std::string& stem() const;
  bool operator==(const Segmentation&) const = default;
};

inline constexpr int kMaxStackedProclitics = 3;

// Non-Arabic or unsegmentable words come back as a single bare segment.
Segmentation SegmentWord(std::string_view word, const CliticTable& table);

// Replaces each Arabic word by its segments separated by single spaces.
// Expects normalized text (single-space separated).
std::string SegmentText(std::string_view text, const CliticTable& table);

struct DesegmentResult {
  std::string text;
  std::size_t dangling_markers = 0;
};

// Joins "X+" to the following token and "+X" to the preceding one. Only
// tokens whose body is Arabic letters count as markers.
DesegmentResult DesegmentTextChecked(std::string_view segmented);
std::string DesegmentText(std::string_view segmented);

// Whether a token uses the clitic marker convention ("X+" or "+X").
bool IsProcliticToken(std::string_view token);
bool IsEncliticToken(std::string_view token);

}  // namespace arabtok

#endif  // ARABTOK_MORPHSEG_H_
