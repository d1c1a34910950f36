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

// Command-line driver: preprocess, train, encode, decode, eval, compare and
// dump-clitics. Run() never exits the process and writes only to the given
// streams, so it can be driven from tests.

#ifndef ARABTOK_CLI_H_
#define ARABTOK_CLI_H_

#include <ostream>
#include <span>
#include <string>

namespace arabtok::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitData = 2,
};

// `args` excludes the program name. A "--config file.json" option supplies
// defaults for any flag of the chosen command; flags on the command line
// win. Machine-readable results go to `out`, logs to `err`.
int Run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

int Main(int argc, char** argv);

}  // namespace arabtok::cli

#endif  // ARABTOK_CLI_H_
