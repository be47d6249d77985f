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

#include "lppa/prompts.h"

#include <gtest/gtest.h>

#include "fixtures.h"
#include "lppa/annotator.h"
#include "lppa/synth.h"

namespace lppa {
namespace {

using testing::Golden;

bool Contains(std::string_view hay, std::string_view needle) {
  return hay.find(needle) != std::string_view::npos;
}

TEST(PromptsTest, GoldensArePresent) {
  for (const char* f : {"task_system.txt", "task_user_prefix.txt",
                        "aeg_system.txt", "aeg_user.txt", "spi_system.txt",
                        "spi_user.txt", "spi_exemplar.txt", "spi_record.jsonl",
                        "spi_identity.txt"}) {
    EXPECT_FALSE(Golden(f).empty()) << f;
  }
}

TEST(PromptsTest, TaskPromptMatchesGolden) {
  ChatRequest r = BuildTaskPrompt("X");
  EXPECT_EQ(r.system, Golden("task_system.txt"));
  EXPECT_EQ(r.user, Golden("task_user_prefix.txt") + "X");
  EXPECT_TRUE(r.user.ends_with("Here is the clinical note:X"));
  EXPECT_EQ(r.temperature, 0.0);
}

TEST(PromptsTest, TaskPromptInstructionsAndTypeOrder) {
  const std::string user = BuildTaskPrompt("note").user;
  EXPECT_TRUE(Contains(user, "focus on ensuring no relevant entities are missing"));
  std::string list = "[";
  for (EntityType t : kAllEntityTypes) {
    if (list.size() > 1) list += ", ";
    list += "\"" + std::string(EntityTypeName(t)) + "\"";
  }
  list += "]";
  EXPECT_TRUE(Contains(user, list)) << list;
}

TEST(PromptsTest, TaskPromptRejectsEmptyNote) {
  EXPECT_THROW(BuildTaskPrompt(""), std::invalid_argument);
}

TEST(PromptsTest, AegPromptMatchesGolden) {
  ChatRequest a = BuildAegPrompt();
  EXPECT_EQ(a.system, Golden("aeg_system.txt"));
  EXPECT_EQ(a.user, Golden("aeg_user.txt"));
  EXPECT_TRUE(Contains(a.system,
                       "extract all PHI entities within the simulated clinical "
                       "notes and store them in a dictionary"));
  EXPECT_TRUE(Contains(a.system, "there are two special cases"));
  EXPECT_TRUE(Contains(a.system, "'Dr. John'"));
  EXPECT_TRUE(Contains(a.system, "'Mr. John'"));
  EXPECT_EQ(BuildAegPrompt(), a);
  EXPECT_THROW(BuildAegPrompt(2), std::invalid_argument);
}

TEST(PromptsTest, AegExemplarsAreAppended) {
  ChatRequest a = BuildAegPrompt(1, {"EX-ONE", "EX-TWO"});
  EXPECT_TRUE(a.user.starts_with(Golden("aeg_user.txt")));
  EXPECT_LT(a.user.find("EX-ONE"), a.user.find("EX-TWO"));
}

TEST(PromptsTest, SpiPromptMatchesGolden) {
  StructuredRecord record = RecordFromJsonLine(Golden("spi_record.jsonl"));
  std::string ident = Golden("spi_identity.txt");
  std::vector<std::string> lines;
  for (std::size_t b = 0, e; b < ident.size(); b = e + 1) {
    e = ident.find('\n', b);
    if (e == std::string::npos) e = ident.size();
    lines.push_back(ident.substr(b, e - b));
  }
  ASSERT_GE(lines.size(), 3u);
  SimulatedIdentity id{lines[0], lines[1], lines[2], std::nullopt};
  ChatRequest r = BuildSpiPrompt(record, id, Golden("spi_exemplar.txt"));
  EXPECT_EQ(r.system, Golden("spi_system.txt"));
  EXPECT_EQ(r.user, Golden("spi_user.txt"));
  for (const char* marker : {"<INFORMATION>", "<END OF INFORMATION>",
                             "<EXAMPLE>", "<END OF EXAMPLE>"}) {
    EXPECT_TRUE(Contains(r.user, marker)) << marker;
  }
  EXPECT_TRUE(Contains(r.user,
                       "extract all PHI entities within the note and store "
                       "them in a JSON"));
  EXPECT_TRUE(Contains(r.user, "The email domain name must be a real one"));
  EXPECT_TRUE(Contains(r.user, "there are two special cases"));
}

}  // namespace
}  // namespace lppa
