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

#include "lppa/note.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <random>
#include <sstream>

#include "fixtures.h"
#include "lppa/errors.h"

namespace lppa {
namespace {

NoteRecord Sample() {
  NoteRecord n;
  n.id = "n1";
  n.text = "Isla Wilson, 69, phone 958-780-1849.";
  PhiDictionary phi;
  phi.Add(EntityType::kPerson, "Isla Wilson");
  phi.Add(EntityType::kAge, "69");
  n.phi = phi;
  n.source = NoteSource::kSpi;
  return n;
}

TEST(NoteTest, JsonLineShape) {
  EXPECT_EQ(NoteToJsonLine(Sample()),
            R"({"id":"n1","text":"Isla Wilson, 69, phone 958-780-1849.",)"
            R"("phi":{"PERSON":["Isla Wilson"],"AGE":["69"]},"source":"spi"})");
  NoteRecord bare;
  bare.id = "x";
  bare.text = "t";
  EXPECT_EQ(NoteToJsonLine(bare),
            R"({"id":"x","text":"t","phi":null,"source":"unknown"})");
}

TEST(NoteTest, RoundTrip) {
  NoteRecord n = Sample();
  EXPECT_EQ(NoteFromJsonLine(NoteToJsonLine(n)), n);
}

TEST(NoteTest, MissingOptionalFields) {
  NoteRecord n = NoteFromJsonLine(R"({"id":"a","text":"b"})");
  EXPECT_FALSE(n.phi);
  EXPECT_EQ(n.source, NoteSource::kUnknown);
  n = NoteFromJsonLine(R"({"id":"a","text":"b","phi":null,"source":null})");
  EXPECT_FALSE(n.phi);
}

TEST(NoteTest, Rejections) {
  EXPECT_THROW(NoteFromJsonLine("nope"), ParseError);
  EXPECT_THROW(NoteFromJsonLine(R"({"text":"b"})"), ParseError);
  EXPECT_THROW(NoteFromJsonLine(R"({"id":"a","text":""})"), ParseError);
  EXPECT_THROW(NoteFromJsonLine(R"({"id":"a","text":"b","phi":[]})"),
               ParseError);
  EXPECT_THROW(NoteFromJsonLine(R"({"id":"a","text":"b","phi":{"NAME":["x"]}})"),
               SchemaError);
}

TEST(NoteTest, SourceNames) {
  for (NoteSource s : {NoteSource::kReal, NoteSource::kAeg, NoteSource::kSpi,
                       NoteSource::kUnknown}) {
    EXPECT_EQ(NoteSourceFromName(NoteSourceName(s)), s);
  }
  EXPECT_EQ(NoteSourceFromName("hybrid"), NoteSource::kUnknown);
}

TEST(NoteTest, ReadCorpusSkipsBlankLinesAndReportsLineNumbers) {
  std::istringstream in(
      "{\"id\":\"a\",\"text\":\"x\"}\n\n  \n{\"id\":\"b\",\"text\":\"y\"}\n");
  EXPECT_EQ(ReadCorpus(in).size(), 2u);

  std::istringstream bad("{\"id\":\"a\",\"text\":\"x\"}\n{oops\n");
  try {
    ReadCorpus(bad);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

TEST(NoteTest, DuplicateIdsRejected) {
  std::istringstream in(
      "{\"id\":\"a\",\"text\":\"x\"}\n{\"id\":\"a\",\"text\":\"y\"}\n");
  EXPECT_THROW(ReadCorpus(in), ParseError);
}

TEST(NoteTest, FileRoundTripOfFixtureCorpus) {
  Corpus corpus = testing::SpiFixtureCorpus(50, 3);
  auto path = std::filesystem::temp_directory_path() / "lppa_note_test.jsonl";
  WriteCorpusFile(path, corpus);
  EXPECT_EQ(ReadCorpusFile(path), corpus);
  std::filesystem::remove(path);
  EXPECT_THROW(ReadCorpusFile(path), IoError);
}

TEST(NoteTest, Utf8TextSurvives) {
  NoteRecord n;
  n.id = "u";
  n.text = "Zo\xC3\xAB \xE2\x80\x94 caf\xC3\xA9";
  EXPECT_EQ(NoteFromJsonLine(NoteToJsonLine(n)).text, n.text);
}

}  // namespace
}  // namespace lppa
