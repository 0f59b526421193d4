// Copyright 2026 The title-miner Authors.
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

#ifndef TITLEMINER_TOOLS_COMMANDS_H_
#define TITLEMINER_TOOLS_COMMANDS_H_

#include <iosfwd>

namespace titleminer {

// Exit codes of the title_miner command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitBadInput = 2;  // also unwritable output
inline constexpr int kExitBadLexicon = 3;
inline constexpr int kExitBadRecords = 4;

// Runs one invocation. Data goes to `out`, diagnostics to `err`; "-" as an
// input path reads `in`.
int run_cli(int argc, const char *const *argv, std::istream &in,
            std::ostream &out, std::ostream &err);

}  // namespace titleminer

#endif  // TITLEMINER_TOOLS_COMMANDS_H_
