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

#include "app_config.h"

#include <fstream>

#include "json.hpp"
#include "lppa/errors.h"

namespace lppa::cli {
namespace {

using nlohmann::json;

template <typename T>
void Read(const json& obj, const char* key, T* out) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return;
  try {
    *out = it->get<T>();
  } catch (const json::exception&) {
    throw SchemaError(std::string("config: bad value for '") + key + "'");
  }
}

void ReadPath(const json& obj, const char* key, const std::filesystem::path& base,
              std::filesystem::path* out) {
  std::string value;
  Read(obj, key, &value);
  if (value.empty()) return;
  std::filesystem::path p(value);
  *out = p.is_absolute() ? p : base / p;
}

}  // namespace

AppConfig DefaultConfig(const std::filesystem::path& data_dir) {
  AppConfig c;
  c.data_dir = data_dir;
  c.patterns = data_dir / "rules" / "patterns.tsv";
  c.dictionaries = data_dir / "rules" / "dictionaries";
  c.pools = data_dir / "pools";
  c.ontology = data_dir / "ontology.txt";
  c.pricing = data_dir / "pricing.json";
  c.aeg_exemplars = data_dir / "exemplars" / "aeg";
  c.spi_exemplars = data_dir / "exemplars" / "spi";
  return c;
}

AppConfig LoadConfigFile(const std::filesystem::path& file, AppConfig c) {
  std::ifstream in(file);
  if (!in) throw IoError("cannot open config file: " + file.string());
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) throw ParseError("config is not valid JSON: " + file.string());
  if (!j.is_object()) throw SchemaError("config must be a JSON object");
  // Relative paths resolve against the config file's directory.
  const std::filesystem::path base = file.parent_path();

  std::filesystem::path data_dir;
  ReadPath(j, "data_dir", base, &data_dir);
  if (!data_dir.empty()) {
    AppConfig rebased = DefaultConfig(data_dir);
    rebased.endpoint = c.endpoint;
    rebased.model = c.model;
    rebased.timeout = c.timeout;
    rebased.seed = c.seed;
    rebased.concurrency = c.concurrency;
    rebased.retry = c.retry;
    rebased.normalization = c.normalization;
    rebased.deid = c.deid;
    c = std::move(rebased);
  }

  Read(j, "seed", &c.seed);
  Read(j, "concurrency", &c.concurrency);
  if (auto it = j.find("endpoint"); it != j.end() && it->is_object()) {
    Read(*it, "url", &c.endpoint);
    Read(*it, "model", &c.model);
    int timeout = static_cast<int>(c.timeout.count());
    Read(*it, "timeout_seconds", &timeout);
    c.timeout = std::chrono::seconds(timeout);
  }
  if (auto it = j.find("retry"); it != j.end() && it->is_object()) {
    Read(*it, "max_attempts", &c.retry.max_attempts);
    int backoff = static_cast<int>(c.retry.backoff_base.count());
    Read(*it, "backoff_ms", &backoff);
    c.retry.backoff_base = std::chrono::milliseconds(backoff);
    Read(*it, "parse_retry", &c.retry.parse_retry);
  }
  if (auto it = j.find("normalization"); it != j.end() && it->is_object()) {
    Read(*it, "case_fold", &c.normalization.case_fold);
    Read(*it, "collapse_whitespace", &c.normalization.collapse_whitespace);
    Read(*it, "strip_edge_punctuation",
         &c.normalization.strip_edge_punctuation);
  }
  if (auto it = j.find("deid"); it != j.end() && it->is_object()) {
    Read(*it, "label_format", &c.deid.label_format);
    Read(*it, "case_insensitive", &c.deid.case_insensitive);
    Read(*it, "word_boundary", &c.deid.word_boundary);
  }
  if (auto it = j.find("paths"); it != j.end() && it->is_object()) {
    ReadPath(*it, "patterns", base, &c.patterns);
    ReadPath(*it, "dictionaries", base, &c.dictionaries);
    ReadPath(*it, "pools", base, &c.pools);
    ReadPath(*it, "ontology", base, &c.ontology);
    ReadPath(*it, "pricing", base, &c.pricing);
    ReadPath(*it, "aeg_exemplars", base, &c.aeg_exemplars);
    ReadPath(*it, "spi_exemplars", base, &c.spi_exemplars);
  }
  if (c.concurrency < 1) throw SchemaError("config: concurrency must be >= 1");
  if (c.retry.max_attempts < 1) {
    throw SchemaError("config: retry.max_attempts must be >= 1");
  }
  try {
    c.deid.Validate();
  } catch (const std::invalid_argument& e) {
    throw SchemaError(std::string("config: ") + e.what());
  }
  CheckPaths(c);
  return c;
}

void CheckPaths(const AppConfig& c) {
  for (const std::filesystem::path* p :
       {&c.patterns, &c.dictionaries, &c.pools, &c.ontology, &c.pricing,
        &c.aeg_exemplars, &c.spi_exemplars}) {
    if (!std::filesystem::exists(*p)) {
      throw IoError("configured path does not exist: " + p->string());
    }
  }
}

}  // namespace lppa::cli
