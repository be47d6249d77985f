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

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "cli.h"

namespace {

// LPPA_DATA_DIR wins; otherwise the source tree's data directory, falling
// back to the install location when the binary runs from an install.
std::filesystem::path DataDir() {
  if (const char* env = std::getenv("LPPA_DATA_DIR"); env && *env) return env;
  std::error_code ec;
  if (std::filesystem::is_directory(LPPA_DEFAULT_DATA_DIR, ec)) {
    return LPPA_DEFAULT_DATA_DIR;
  }
  return LPPA_INSTALLED_DATA_DIR;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lppa::cli::Dispatch(args, std::cout, std::cerr, DataDir());
}
