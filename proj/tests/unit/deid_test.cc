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

#include "lppa/deid.h"

#include <gtest/gtest.h>

#include <random>

#include "fixtures.h"

namespace lppa {
namespace {

PhiDictionary Phi(std::initializer_list<std::pair<EntityType, const char*>> in) {
  PhiDictionary d;
  for (const auto& [t, m] : in) d.Add(t, m);
  return d;
}

TEST(DeidTest, IntroductionSentence) {
  PhiDictionary phi = Phi({{EntityType::kPerson, "John Doe"},
                           {EntityType::kAge, "45"},
                           {EntityType::kDateTime, "May 3, 2023"}});
  DeidentifiedNote d = Deidentify(
      "John Doe, a 45-year-old male, was diagnosed with hypertension on May "
      "3, 2023",
      phi);
  EXPECT_EQ(d.text,
            "[PERSON], a [AGE]-year-old male, was diagnosed with hypertension "
            "on [DATE_TIME]");
  ASSERT_EQ(d.replacements.size(), 3u);
  EXPECT_EQ(d.replacements[0].original, "John Doe");
  EXPECT_EQ(d.replacements[0].start, 0u);
  EXPECT_EQ(d.replacements[0].end, 8u);
  EXPECT_TRUE(d.residuals.empty());
  EXPECT_TRUE(VerifyClean(d, phi).empty());
}

TEST(DeidTest, EmptyPhiLeavesTextAlone) {
  DeidentifiedNote d = Deidentify("Nothing to see.", PhiDictionary());
  EXPECT_EQ(d.text, "Nothing to see.");
  EXPECT_TRUE(d.replacements.empty());
}

TEST(DeidTest, WordBoundary) {
  PhiDictionary phi = Phi({{EntityType::kPerson, "Ann"}});
  EXPECT_EQ(Deidentify("Anniversary with Ann", phi).text,
            "Anniversary with [PERSON]");
  DeidPolicy loose;
  loose.word_boundary = false;
  EXPECT_EQ(Deidentify("Anniversary with Ann", phi, loose).text,
            "[PERSON]iversary with [PERSON]");
}

TEST(DeidTest, CaseSensitivity) {
  PhiDictionary phi = Phi({{EntityType::kPerson, "ann"}});
  EXPECT_EQ(Deidentify("ANN and Ann", phi).text, "[PERSON] and [PERSON]");
  DeidPolicy exact;
  exact.case_insensitive = false;
  DeidentifiedNote d = Deidentify("ANN and Ann", phi, exact);
  EXPECT_EQ(d.text, "ANN and Ann");
  ASSERT_EQ(d.residuals.size(), 1u);
}

TEST(DeidTest, ContainedMentionDoesNotSplitLongerOne) {
  PhiDictionary phi = Phi(
      {{EntityType::kPerson, "John"}, {EntityType::kPerson, "John Doe"}});
  DeidentifiedNote d = Deidentify("John Doe met John.", phi);
  EXPECT_EQ(d.text, "[PERSON] met [PERSON].");
  EXPECT_TRUE(VerifyClean(d, phi).empty());
}

TEST(DeidTest, ResidualsAreReported) {
  PhiDictionary phi = Phi(
      {{EntityType::kPerson, "Isla"}, {EntityType::kZip, "75250"}});
  DeidentifiedNote d = Deidentify("Isla was seen.", phi);
  ASSERT_EQ(d.residuals.size(), 1u);
  EXPECT_EQ(d.residuals[0].mention, "75250");
  auto leaks = VerifyClean(d, phi);
  ASSERT_EQ(leaks.size(), 1u);
  EXPECT_EQ(leaks[0].type, EntityType::kZip);
  EXPECT_FALSE(leaks[0].position);
}

TEST(DeidTest, VerifyFindsLeaks) {
  PhiDictionary phi = Phi({{EntityType::kPerson, "Isla"}});
  DeidentifiedNote fake;
  fake.text = "[PERSON] and Isla";
  auto leaks = VerifyClean(fake, phi);
  ASSERT_EQ(leaks.size(), 1u);
  EXPECT_EQ(*leaks[0].position, 13u);
}

TEST(DeidTest, CustomLabelFormat) {
  DeidPolicy p;
  p.label_format = "<<{TYPE}>>";
  EXPECT_EQ(Deidentify("call 958-780-1849",
                       Phi({{EntityType::kPhoneNumber, "958-780-1849"}}), p)
                .text,
            "call <<PHONE_NUMBER>>");
  p.label_format = "[]";
  EXPECT_THROW(p.Validate(), std::invalid_argument);
  p.label_format = "{TYPE}{TYPE}";
  EXPECT_THROW(Deidentify("x", PhiDictionary(), p), std::invalid_argument);
}

TEST(DeidTest, MentionMatchingALabelNameIsHarmless) {
  PhiDictionary phi = Phi({{EntityType::kPerson, "PERSON"}});
  DeidentifiedNote d = Deidentify("[PERSON] PERSON", phi);
  EXPECT_EQ(d.text, "[PERSON] [PERSON]");
  EXPECT_EQ(Deidentify(d.text, phi).text, d.text);
}

TEST(DeidTest, CompletenessAndIdempotenceOnFixtures) {
  for (const NoteRecord& n : testing::SpiFixtureCorpus(300, 77)) {
    DeidentifiedNote d = Deidentify(n.text, *n.phi);
    ASSERT_TRUE(VerifyClean(d, *n.phi).empty()) << n.id;
    ASSERT_EQ(Deidentify(d.text, *n.phi).text, d.text) << n.id;
  }
}

// Text outside replaced spans survives byte for byte.
TEST(DeidTest, UntouchedBytesPreservedProperty) {
  std::mt19937_64 rng(8);
  const char* words[] = {"Ann", "Bob", "x", "ann", "Bo", "75250", "-", "Ann-Bob",
                         "Dr. Ann", " ", ",", "[AGE]"};
  for (int iter = 0; iter < 500; ++iter) {
    std::string text;
    for (int k = 0; k < 12; ++k) {
      text += words[testing::Uniform(rng, std::size(words))];
      if (rng() % 2) text += ' ';
    }
    PhiDictionary phi = testing::RandomPhi(rng, 2);
    phi.Add(EntityType::kPerson, "Ann");
    DeidentifiedNote d = Deidentify(text, phi);
    std::string rebuilt;
    std::size_t cursor = 0;
    for (const Replacement& r : d.replacements) {
      ASSERT_LE(cursor, r.start);
      ASSERT_EQ(text.substr(r.start, r.end - r.start), r.original);
      rebuilt += text.substr(cursor, r.start - cursor);
      rebuilt += "[" + std::string(EntityTypeName(r.type)) + "]";
      cursor = r.end;
    }
    rebuilt += text.substr(cursor);
    ASSERT_EQ(rebuilt, d.text);
    ASSERT_TRUE(VerifyClean(d, phi).size() == d.residuals.size()) << text;
    ASSERT_EQ(Deidentify(d.text, phi).text, d.text) << text;
  }
}

}  // namespace
}  // namespace lppa
