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

#include "lppa/text.h"

#include <gtest/gtest.h>

namespace lppa::text {
namespace {

TEST(TextTest, TrimRemovesAsciiWhitespaceOnly) {
  EXPECT_EQ(Trim("  \t a b \n"), "a b");
  EXPECT_EQ(Trim(""), "");
  EXPECT_EQ(Trim(" \r\n"), "");
  EXPECT_EQ(Trim("\xC2\xA0x"), "\xC2\xA0x");
}

TEST(TextTest, WordCharsIncludeHighBytes) {
  EXPECT_TRUE(IsWordChar('a'));
  EXPECT_TRUE(IsWordChar('_'));
  EXPECT_TRUE(IsWordChar('\xC3'));
  EXPECT_FALSE(IsWordChar('-'));
  EXPECT_FALSE(IsWordChar(' '));
}

TEST(TextTest, FindIgnoreCase) {
  EXPECT_EQ(FindIgnoreCase("Hello World", "world"), 6u);
  EXPECT_EQ(FindIgnoreCase("Hello World", "WORLD", 7), std::string_view::npos);
  EXPECT_EQ(FindIgnoreCase("abc", ""), 0u);
  EXPECT_EQ(FindIgnoreCase("ab", "abc"), std::string_view::npos);
}

TEST(TextTest, CodePointCountSkipsContinuationBytes) {
  EXPECT_EQ(CodePointCount(""), 0u);
  EXPECT_EQ(CodePointCount("abcd"), 4u);
  EXPECT_EQ(CodePointCount("caf\xC3\xA9"), 4u);
  EXPECT_EQ(CodePointCount("\xE2\x82\xAC"), 1u);
}

TEST(TextTest, AsciiLowerLeavesOtherBytes) {
  EXPECT_EQ(AsciiLower("AbC-\xC3\x89"), "abc-\xC3\x89");
}

}  // namespace
}  // namespace lppa::text
