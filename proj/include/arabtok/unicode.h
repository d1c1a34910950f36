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

#ifndef ARABTOK_UNICODE_H_
#define ARABTOK_UNICODE_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace arabtok::unicode {

inline constexpr char32_t kReplacementChar = 0xFFFD;

// Decodes one codepoint starting at text[*pos] and advances *pos. Malformed
// sequences decode to U+FFFD and consume a single byte.
char32_t DecodeNext(std::string_view text, std::size_t* pos);

void AppendUtf8(char32_t cp, std::string* out);
std::string EncodeUtf8(char32_t cp);

std::u32string ToCodepoints(std::string_view text);
std::string FromCodepoints(std::u32string_view cps);

// Splits into one UTF-8 string per codepoint.
std::vector<std::string> SplitChars(std::string_view text);

std::size_t CodepointLength(std::string_view text);

// Re-encodes text so that every malformed byte becomes U+FFFD.
std::string Sanitize(std::string_view text);

bool IsWhitespace(char32_t cp);

// Letters of the major alphabetic scripts. Combining marks, digits,
// punctuation and the tatweel are not letters.
bool IsLetter(char32_t cp);

// Codepoint lies in Arabic, Arabic Supplement or Arabic Extended-A.
bool InArabicBlocks(char32_t cp);

inline bool IsArabicLetter(char32_t cp) {
  return InArabicBlocks(cp) && IsLetter(cp);
}

// ASCII digits plus Arabic-Indic and Extended Arabic-Indic digits.
bool IsDigit(char32_t cp);

// True when the word is non-empty and every codepoint is an Arabic letter.
bool IsArabicWord(std::string_view word);

// Splits on runs of whitespace codepoints; never yields empty pieces.
std::vector<std::string_view> SplitWhitespace(std::string_view text);

}  // namespace arabtok::unicode

#endif  // ARABTOK_UNICODE_H_
