// Copyright 2026 The pencil Authors.
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

#ifndef PENCIL_TOOLS_CLI_HPP
#define PENCIL_TOOLS_CLI_HPP

#include <iosfwd>

namespace pencil::cli {

enum ExitCode : int {
  kPass = 0,
  kRefuted = 1,
  kInconclusive = 2,
  kUsageError = 3,
};

// Runs one subcommand. Output goes to `out`, diagnostics to `err`.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pencil::cli

#endif  // PENCIL_TOOLS_CLI_HPP
