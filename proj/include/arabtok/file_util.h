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

#ifndef ARABTOK_FILE_UTIL_H_
#define ARABTOK_FILE_UTIL_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

namespace arabtok {

// Writes `content` to a sibling temporary file and renames it over `path`,
// so readers never observe a partial file.
void WriteFileAtomic(const std::filesystem::path& path,
                     std::string_view content);

std::string ReadFile(const std::filesystem::path& path);

// 64-bit FNV-1a. Stable across platforms, used for bundle checksums and
// cache keys.
std::uint64_t Fnv1a64(std::string_view data,
                      std::uint64_t seed = 0xcbf29ce484222325ULL);

std::string Hex64(std::uint64_t value);

}  // namespace arabtok

#endif  // ARABTOK_FILE_UTIL_H_
