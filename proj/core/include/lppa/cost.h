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

#ifndef LPPA_COST_H_
#define LPPA_COST_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lppa {

struct PricingConfig {
  std::string model;
  // Currency units per 1000 tokens.
  double input_price_per_1k = 0.0;
  double output_price_per_1k = 0.0;
};

struct CostEstimate {
  std::uint64_t n_calls = 0;
  std::uint64_t input_tokens = 0;
  std::uint64_t output_tokens = 0;
  double total_cost = 0.0;
};

// Rough token count: ceil(code points / 4). Approximate by nature; it is
// meant for budgeting, not billing.
std::uint64_t EstimateTokens(std::string_view text);

CostEstimate EstimateCost(std::uint64_t n_calls, std::uint64_t avg_in,
                          std::uint64_t avg_out, const PricingConfig& pricing);

// Reads a JSON array of {"model","input_price_per_1k","output_price_per_1k"}.
// Throws IoError, ParseError, or SchemaError (missing field, negative price,
// duplicate model).
std::vector<PricingConfig> LoadPricing(const std::string& path);
std::vector<PricingConfig> ParsePricing(std::string_view json_text);

// Throws SchemaError when `model` is not listed.
const PricingConfig& FindPricing(const std::vector<PricingConfig>& table,
                                 std::string_view model);

std::string CostEstimateToJson(const CostEstimate& estimate,
                               const PricingConfig& pricing);

}  // namespace lppa

#endif  // LPPA_COST_H_
