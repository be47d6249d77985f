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

#include "lppa/cost.h"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "lppa/errors.h"
#include "lppa/text.h"

namespace lppa {

std::uint64_t EstimateTokens(std::string_view text) {
  return (text::CodePointCount(text) + 3) / 4;
}

CostEstimate EstimateCost(std::uint64_t n_calls, std::uint64_t avg_in,
                          std::uint64_t avg_out,
                          const PricingConfig& pricing) {
  CostEstimate e;
  e.n_calls = n_calls;
  e.input_tokens = n_calls * avg_in;
  e.output_tokens = n_calls * avg_out;
  e.total_cost = (static_cast<double>(e.input_tokens) *
                      pricing.input_price_per_1k +
                  static_cast<double>(e.output_tokens) *
                      pricing.output_price_per_1k) /
                 1000.0;
  return e;
}

std::vector<PricingConfig> ParsePricing(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("pricing: ") + e.what());
  }
  if (!j.is_array()) throw SchemaError("pricing: expected a JSON array");
  std::vector<PricingConfig> table;
  for (const auto& entry : j) {
    if (!entry.is_object()) throw SchemaError("pricing: entry is not an object");
    auto price = [&](const char* field) {
      auto it = entry.find(field);
      if (it == entry.end() || !it->is_number()) {
        throw SchemaError(std::string("pricing: missing numeric ") + field);
      }
      double v = it->get<double>();
      if (v < 0.0) throw SchemaError(std::string("pricing: negative ") + field);
      return v;
    };
    auto model = entry.find("model");
    if (model == entry.end() || !model->is_string() ||
        model->get<std::string>().empty()) {
      throw SchemaError("pricing: missing model name");
    }
    PricingConfig p{model->get<std::string>(), price("input_price_per_1k"),
                    price("output_price_per_1k")};
    for (const PricingConfig& q : table) {
      if (q.model == p.model) {
        throw SchemaError("pricing: duplicate model " + p.model);
      }
    }
    table.push_back(std::move(p));
  }
  return table;
}

std::vector<PricingConfig> LoadPricing(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open pricing file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParsePricing(buf.str());
}

const PricingConfig& FindPricing(const std::vector<PricingConfig>& table,
                                 std::string_view model) {
  for (const PricingConfig& p : table) {
    if (p.model == model) return p;
  }
  throw SchemaError("no pricing for model " + std::string(model));
}

std::string CostEstimateToJson(const CostEstimate& estimate,
                               const PricingConfig& pricing) {
  nlohmann::ordered_json j;
  j["model"] = pricing.model;
  j["n_calls"] = estimate.n_calls;
  j["input_tokens"] = estimate.input_tokens;
  j["output_tokens"] = estimate.output_tokens;
  j["total_cost"] = estimate.total_cost;
  return j.dump(2);
}

}  // namespace lppa
