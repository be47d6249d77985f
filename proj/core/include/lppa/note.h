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

#ifndef LPPA_NOTE_H_
#define LPPA_NOTE_H_

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lppa/phi_dictionary.h"

namespace lppa {

enum class NoteSource { kReal, kAeg, kSpi, kUnknown };

std::string_view NoteSourceName(NoteSource source);
// Unrecognized names map to kUnknown.
NoteSource NoteSourceFromName(std::string_view name);

struct NoteRecord {
  std::string id;
  std::string text;
  std::optional<PhiDictionary> phi;
  NoteSource source = NoteSource::kUnknown;

  friend bool operator==(const NoteRecord&, const NoteRecord&) = default;
};

using Corpus = std::vector<NoteRecord>;

// One line of notes.jsonl:
//   {"id":...,"text":...,"phi":{...}|null,"source":...|null}
// "phi" uses the canonical dictionary serialization and is parsed strictly.
std::string NoteToJsonLine(const NoteRecord& note);
NoteRecord NoteFromJsonLine(std::string_view line);

// Reads a notes.jsonl stream. Blank lines are skipped. Throws ParseError
// naming the 1-based line on malformed input, and ParseError when ids repeat
// or a text is empty.
Corpus ReadCorpus(std::istream& in);
Corpus ReadCorpusFile(const std::filesystem::path& path);

void WriteCorpus(std::ostream& out, const Corpus& corpus);
void WriteCorpusFile(const std::filesystem::path& path, const Corpus& corpus);

}  // namespace lppa

#endif  // LPPA_NOTE_H_
