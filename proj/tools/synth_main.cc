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

// Writes a deterministic synthetic Arabic web corpus as JSONL.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "arabtok/file_util.h"
#include "arabtok/synth.h"

int main(int argc, char** argv) {
  arabtok::SynthConfig config;
  std::string output;
  double megabytes = 1.0;
  CLI::App app{"Generate a synthetic Arabic corpus (JSONL)", "arabtok-synth"};
  app.option_defaults()->always_capture_default();
  app.add_option("--output", output, "Output JSONL file")->required();
  app.add_option("--megabytes", megabytes, "Amount of document text to produce")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", config.seed, "Generator seed");
  app.add_option("--roots", config.roots, "Number of consonantal roots");
  app.add_option("--zipf", config.zipf_exponent, "Zipf exponent of lemma frequencies");
  CLI11_PARSE(app, argc, argv);
  config.target_bytes = static_cast<std::uint64_t>(megabytes * 1024 * 1024);
  std::ostringstream buffer;
  const std::uint64_t docs = arabtok::WriteSynthJsonl(config, buffer);
  try {
    arabtok::WriteFileAtomic(output, buffer.str());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cout << "{\"command\":\"synth\",\"documents\":" << docs
            << ",\"output\":\"" << output << "\"}\n";
  return 0;
}
