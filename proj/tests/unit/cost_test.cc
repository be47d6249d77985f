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

#include <gtest/gtest.h>
#include <json.hpp>

#include <random>

#include "lppa/errors.h"

namespace lppa {
namespace {

const PricingConfig kPricing{"m", 0.01, 0.03};

TEST(CostTest, EstimateTokens) {
  EXPECT_EQ(EstimateTokens(""), 0u);
  EXPECT_EQ(EstimateTokens("abcdefgh"), 2u);
  EXPECT_EQ(EstimateTokens("abcdefghi"), 3u);
  EXPECT_EQ(EstimateTokens("a"), 1u);
  // Multibyte characters count once.
  EXPECT_EQ(EstimateTokens("\xC3\xA9\xC3\xA9\xC3\xA9\xC3\xA9"), 1u);
  EXPECT_EQ(EstimateTokens(std::string(6400, 'x')), 1600u);
  EXPECT_EQ(EstimateTokens(std::string(6398, 'x')), 1600u);
}

TEST(CostTest, HeadlineRun) {
  CostEstimate e = EstimateCost(4000, 1600, 500, kPricing);
  EXPECT_EQ(e.input_tokens, 6'400'000u);
  EXPECT_EQ(e.output_tokens, 2'000'000u);
  EXPECT_DOUBLE_EQ(e.total_cost, 124.0);
}

TEST(CostTest, SmallRunArithmetic) {
  EXPECT_NEAR(EstimateCost(100, 1000, 100, kPricing).total_cost, 1.30, 1e-12);
}

TEST(CostTest, ZeroCalls) {
  CostEstimate e = EstimateCost(0, 1600, 500, kPricing);
  EXPECT_EQ(e.input_tokens, 0u);
  EXPECT_EQ(e.output_tokens, 0u);
  EXPECT_EQ(e.total_cost, 0.0);
}

TEST(CostTest, LinearInCallsProperty) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    std::uint64_t n = rng() % 10000, m = rng() % 10000;
    std::uint64_t in = rng() % 4000, out = rng() % 2000;
    PricingConfig p{"m", (rng() % 100) / 1000.0, (rng() % 100) / 1000.0};
    CostEstimate a = EstimateCost(n, in, out, p);
    CostEstimate b = EstimateCost(m, in, out, p);
    CostEstimate ab = EstimateCost(n + m, in, out, p);
    EXPECT_EQ(ab.input_tokens, a.input_tokens + b.input_tokens);
    EXPECT_EQ(ab.output_tokens, a.output_tokens + b.output_tokens);
    EXPECT_NEAR(ab.total_cost, a.total_cost + b.total_cost,
                1e-9 * (1 + ab.total_cost));
  }
}

TEST(CostTest, PricingTable) {
  auto t = ParsePricing(
      R"([{"model":"a","input_price_per_1k":0.01,"output_price_per_1k":0.03},)"
      R"( {"model":"b","input_price_per_1k":0,"output_price_per_1k":1}])");
  ASSERT_EQ(t.size(), 2u);
  EXPECT_EQ(FindPricing(t, "b").output_price_per_1k, 1.0);
  EXPECT_THROW(FindPricing(t, "c"), SchemaError);
}

TEST(CostTest, PricingErrors) {
  EXPECT_THROW(ParsePricing("not json"), ParseError);
  EXPECT_THROW(ParsePricing("{}"), SchemaError);
  EXPECT_THROW(ParsePricing(R"([{"model":"a","input_price_per_1k":1}])"),
               SchemaError);
  EXPECT_THROW(
      ParsePricing(
          R"([{"model":"a","input_price_per_1k":-1,"output_price_per_1k":1}])"),
      SchemaError);
  EXPECT_THROW(
      ParsePricing(
          R"([{"model":"a","input_price_per_1k":1,"output_price_per_1k":1},)"
          R"({"model":"a","input_price_per_1k":1,"output_price_per_1k":1}])"),
      SchemaError);
  EXPECT_THROW(LoadPricing("/nonexistent/pricing.json"), IoError);
}

TEST(CostTest, BundledPricingLoads) {
  auto t = LoadPricing(std::string(LPPA_DEFAULT_DATA_DIR) + "/pricing.json");
  EXPECT_FALSE(t.empty());
}

TEST(CostTest, JsonOutput) {
  auto j = nlohmann::json::parse(
      CostEstimateToJson(EstimateCost(4000, 1600, 500, kPricing), kPricing));
  EXPECT_EQ(j["model"], "m");
  EXPECT_EQ(j["input_tokens"], 6400000);
  EXPECT_EQ(j["output_tokens"], 2000000);
}

}  // namespace
}  // namespace lppa
