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

// Deterministic synthetic Arabic corpus. Words are built from consonantal
// roots and derivational patterns, decorated with clitics, and drawn with
// Zipfian frequencies. A share of documents carries web noise (markup,
// URLs, Latin text, navigation lists, diacritics, tatweel, elongation,
// Hindi digits, dialect forms) so the filters and normalizer have work.

#ifndef ARABTOK_SYNTH_H_
#define ARABTOK_SYNTH_H_

#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "arabtok/corpus.h"

namespace arabtok {

struct SynthConfig {
  std::uint64_t seed = 0;
  // Generation stops once this many bytes of document text were produced.
  std::uint64_t target_bytes = 1 << 20;
  std::size_t roots = 2400;
  double zipf_exponent = 1.0;
  // Fractions of documents that are pure noise of each kind.
  double english_docs = 0.03;
  double short_docs = 0.03;
  double navigation_docs = 0.02;
  // Fraction of regular documents wrapped in HTML-ish markup.
  double markup_docs = 0.10;
};

class SynthCorpus {
 public:
  explicit SynthCorpus(const SynthConfig& config);
  ~SynthCorpus();
  SynthCorpus(const SynthCorpus&) = delete;
  SynthCorpus& operator=(const SynthCorpus&) = delete;

  // Returns false once target_bytes has been reached.
  bool Next(Document* doc);

  std::uint64_t bytes() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Writes documents as JSONL until target_bytes. Returns the document count.
std::uint64_t WriteSynthJsonl(const SynthConfig& config, std::ostream& out);

std::vector<Document> GenerateSynth(const SynthConfig& config);

}  // namespace arabtok

#endif  // ARABTOK_SYNTH_H_
