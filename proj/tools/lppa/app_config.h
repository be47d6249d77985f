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

#ifndef LPPA_TOOLS_APP_CONFIG_H_
#define LPPA_TOOLS_APP_CONFIG_H_

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <string>

#include "lppa/annotator.h"
#include "lppa/deid.h"
#include "lppa/normalize.h"

namespace lppa::cli {

// Settings shared by all subcommands. Defaults point into the data
// directory; a --config JSON file may override any of them and command-line
// flags override the file.
struct AppConfig {
  std::filesystem::path data_dir;
  std::string endpoint = "mock";
  std::string model;
  std::chrono::seconds timeout{120};
  std::uint64_t seed = 0;
  int concurrency = 1;
  RetryPolicy retry;
  NormalizationPolicy normalization;
  DeidPolicy deid;

  std::filesystem::path patterns;
  std::filesystem::path dictionaries;
  std::filesystem::path pools;
  std::filesystem::path ontology;
  std::filesystem::path pricing;
  std::filesystem::path aeg_exemplars;
  std::filesystem::path spi_exemplars;
};

// Defaults rooted at `data_dir`.
AppConfig DefaultConfig(const std::filesystem::path& data_dir);

// Applies a JSON config file on top of `base`, then checks that every
// referenced path exists. Throws IoError, ParseError or SchemaError.
AppConfig LoadConfigFile(const std::filesystem::path& file, AppConfig base);

// Throws IoError naming the first missing path.
void CheckPaths(const AppConfig& config);

}  // namespace lppa::cli

#endif  // LPPA_TOOLS_APP_CONFIG_H_
