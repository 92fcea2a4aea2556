// Copyright 2026 The Costshare Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COSTSHARE_CLI_COMMANDS_H_
#define COSTSHARE_CLI_COMMANDS_H_

#include <ostream>
#include <string>
#include <vector>

namespace costshare {

// Exit statuses of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// Entry point of the `costshare` tool with subcommands run, alpha, gen,
// suite and check. `args` excludes the program name. Returns kExitOk iff
// every invariant checked by the invocation held.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace costshare

#endif  // COSTSHARE_CLI_COMMANDS_H_
