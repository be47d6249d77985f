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

#include "lppa/phi_dictionary.h"

#include <gtest/gtest.h>

#include <random>

#include "fixtures.h"
#include "lppa/errors.h"

namespace lppa {
namespace {

PhiDictionary Strict(std::string_view s) {
  return ParsePhiDictionary(s, /*strict=*/true).dictionary;
}

TEST(PhiDictionaryTest, AddKeepsDuplicatesAndRejectsBlank) {
  PhiDictionary d;
  d.Add(EntityType::kPerson, "A");
  d.Add(EntityType::kPerson, "A");
  EXPECT_EQ(d.mentions(EntityType::kPerson).size(), 2u);
  EXPECT_EQ(d.size(), 2u);
  EXPECT_THROW(d.Add(EntityType::kAge, "  "), SchemaError);
  EXPECT_THROW(d.Set(EntityType::kAge, {"1", ""}), SchemaError);
}

TEST(PhiDictionaryTest, EmptyListEqualsAbsentKey) {
  PhiDictionary a;
  PhiDictionary b;
  b.Set(EntityType::kZip, {});
  EXPECT_EQ(a, b);
  EXPECT_TRUE(b.empty());
  EXPECT_EQ(Strict(R"({"ZIP":[]})"), PhiDictionary());
}

TEST(PhiDictionaryTest, StrictParsesSampleShape) {
  PhiDictionary d = Strict(R"({"PERSON":["John Doe","Smith"],"AGE":["24"]})");
  EXPECT_EQ(d.mentions(EntityType::kPerson),
            (std::vector<std::string>{"John Doe", "Smith"}));
  EXPECT_EQ(d.mentions(EntityType::kAge), (std::vector<std::string>{"24"}));
  EXPECT_EQ(d.size(), 3u);
}

TEST(PhiDictionaryTest, StrictEmptyObject) {
  EXPECT_TRUE(Strict("{}").empty());
  EXPECT_TRUE(Strict("  {}\n").empty());
}

TEST(PhiDictionaryTest, StrictRejections) {
  EXPECT_THROW(Strict(""), ParseError);
  EXPECT_THROW(Strict("[]"), ParseError);
  EXPECT_THROW(Strict("PHI: {}"), ParseError);
  EXPECT_THROW(Strict(R"({"NAME":["x"]})"), SchemaError);
  EXPECT_THROW(Strict(R"({"AGE":"45"})"), SchemaError);
  EXPECT_THROW(Strict(R"({"AGE":[45]})"), SchemaError);
  EXPECT_THROW(Strict(R"({"AGE":null})"), SchemaError);
  EXPECT_THROW(Strict(R"({"AGE":[" "]})"), SchemaError);
}

TEST(PhiDictionaryTest, LenientExtractsAndCoerces) {
  PhiParseResult r = ParsePhiDictionary("Here is the PHI: {\"AGE\": 45} done",
                                        /*strict=*/false);
  EXPECT_EQ(r.dictionary.mentions(EntityType::kAge),
            (std::vector<std::string>{"45"}));
  // Extraction, then the bare value is both wrapped and coerced.
  ASSERT_EQ(r.warnings.size(), 3u);
  EXPECT_NE(r.warnings[0].find("extracted"), std::string::npos);
  EXPECT_NE(r.warnings[1].find("wrapped bare number"), std::string::npos);
  EXPECT_NE(r.warnings[2].find("coerced number 45"), std::string::npos);
}

TEST(PhiDictionaryTest, LenientRepairLadder) {
  PhiParseResult r = ParsePhiDictionary(
      R"(ok {"NAME":["x"],"PERSON":"Ann","ZIP":[30322, " "],"URL":null} bye)",
      /*strict=*/false);
  EXPECT_EQ(r.dictionary.mentions(EntityType::kPerson),
            (std::vector<std::string>{"Ann"}));
  EXPECT_EQ(r.dictionary.mentions(EntityType::kZip),
            (std::vector<std::string>{"30322"}));
  EXPECT_TRUE(r.dictionary.mentions(EntityType::kUrl).empty());
  // extraction, unknown key, bare string, number, blank, null.
  EXPECT_EQ(r.warnings.size(), 6u);
}

TEST(PhiDictionaryTest, LenientSkipsUnparseableBlocks) {
  PhiParseResult r = ParsePhiDictionary(
      R"(use {braces} like {"AGE":["3"]})", /*strict=*/false);
  EXPECT_EQ(r.dictionary.mentions(EntityType::kAge),
            (std::vector<std::string>{"3"}));
}

TEST(PhiDictionaryTest, LenientIgnoresBracesInsideStrings) {
  PhiParseResult r = ParsePhiDictionary(
      R"(x {"PERSON":["a } b"]} y)", /*strict=*/false);
  EXPECT_EQ(r.dictionary.mentions(EntityType::kPerson),
            (std::vector<std::string>{"a } b"}));
}

TEST(PhiDictionaryTest, LenientStillFailsWithoutObject) {
  EXPECT_THROW(ParsePhiDictionary("no json here", false), ParseError);
  EXPECT_THROW(ParsePhiDictionary("{\"AGE\": [", false), ParseError);
}

TEST(PhiDictionaryTest, SerializeCanonicalOrder) {
  PhiDictionary d;
  d.Add(EntityType::kAge, "24");
  d.Add(EntityType::kPerson, "John Doe");
  EXPECT_EQ(SerializePhiDictionary(d), R"({"PERSON":["John Doe"],"AGE":["24"]})");
  EXPECT_EQ(SerializePhiDictionary(PhiDictionary()), "{}");
  PhiDictionary dup;
  dup.Add(EntityType::kPerson, "A");
  dup.Add(EntityType::kPerson, "A");
  EXPECT_EQ(SerializePhiDictionary(dup), R"({"PERSON":["A","A"]})");
}

TEST(PhiDictionaryTest, SerializeEscapes) {
  PhiDictionary d;
  d.Add(EntityType::kPerson, "O\"Neil\\x");
  d.Add(EntityType::kLocation, "line\nbreak");
  EXPECT_EQ(Strict(SerializePhiDictionary(d)), d);
}

TEST(PhiDictionaryTest, RoundTripProperty) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 1000; ++i) {
    PhiDictionary d = testing::RandomPhi(rng, 4);
    PhiDictionary back = Strict(SerializePhiDictionary(d));
    ASSERT_EQ(back, d);
    for (EntityType t : kAllEntityTypes) {
      ASSERT_EQ(back.mentions(t).size(), d.mentions(t).size());
    }
  }
}

TEST(PhiDictionaryTest, LenientNeverYieldsUnknownKeys) {
  // Every key that survives must serialize back under a known name; the
  // strict parser would reject anything else.
  std::mt19937_64 rng(9);
  const char* keys[] = {"PERSON", "NAME", "ADDRESS", "AGE", "url", "ZIP"};
  for (int i = 0; i < 300; ++i) {
    std::string s = "{";
    const int n = static_cast<int>(rng() % 4);
    for (int k = 0; k < n; ++k) {
      if (k) s += ",";
      s += "\"" + std::string(keys[rng() % 6]) + std::to_string(k % 2 ? k : 0);
      s += "\":[\"v\"]";
    }
    s += "}";
    PhiParseResult r = ParsePhiDictionary(s, false);
    EXPECT_NO_THROW(Strict(SerializePhiDictionary(r.dictionary)));
  }
}

}  // namespace
}  // namespace lppa
