// Copyright 2026 The LPPA Authors.
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

#ifndef LPPA_TOOLS_CLI_H_
#define LPPA_TOOLS_CLI_H_

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

namespace lppa::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// Runs one subcommand. `args` excludes the program name. Results go to
// `out` unless a subcommand writes to an --out file; diagnostics, warnings
// and audit lines go to `err`.
int Dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err,
             const std::filesystem::path& data_dir = LPPA_DEFAULT_DATA_DIR);

}  // namespace lppa::cli

#endif  // LPPA_TOOLS_CLI_H_
