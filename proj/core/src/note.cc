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

#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_set>

#include "json.hpp"
#include "lppa/errors.h"

namespace lppa {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr std::string_view kSourceNames[] = {"real", "aeg", "spi", "unknown"};

}  // namespace

std::string_view NoteSourceName(NoteSource source) {
  return kSourceNames[static_cast<int>(source)];
}

NoteSource NoteSourceFromName(std::string_view name) {
  if (name == "real") return NoteSource::kReal;
  if (name == "aeg") return NoteSource::kAeg;
  if (name == "spi") return NoteSource::kSpi;
  return NoteSource::kUnknown;
}

std::string NoteToJsonLine(const NoteRecord& note) {
  ordered_json j;
  j["id"] = note.id;
  j["text"] = note.text;
  if (note.phi) {
    j["phi"] = ordered_json::parse(SerializePhiDictionary(*note.phi));
  } else {
    j["phi"] = nullptr;
  }
  j["source"] = NoteSourceName(note.source);
  return j.dump(-1, ' ', false, ordered_json::error_handler_t::replace);
}

NoteRecord NoteFromJsonLine(std::string_view line) {
  json j = json::parse(line.begin(), line.end(), nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    throw ParseError("note line is not a JSON object");
  }
  NoteRecord note;
  auto id = j.find("id");
  if (id == j.end() || !id->is_string()) {
    throw ParseError("note is missing string field \"id\"");
  }
  note.id = id->get<std::string>();
  auto text = j.find("text");
  if (text == j.end() || !text->is_string()) {
    throw ParseError("note " + note.id + " is missing string field \"text\"");
  }
  note.text = text->get<std::string>();
  if (note.text.empty()) throw ParseError("note " + note.id + " has empty text");
  auto phi = j.find("phi");
  if (phi != j.end() && !phi->is_null()) {
    if (!phi->is_object()) {
      throw ParseError("note " + note.id + ": \"phi\" must be an object");
    }
    note.phi = ParsePhiDictionary(phi->dump(), /*strict=*/true).dictionary;
  }
  auto source = j.find("source");
  if (source != j.end() && source->is_string()) {
    note.source = NoteSourceFromName(source->get<std::string>());
  }
  return note;
}

Corpus ReadCorpus(std::istream& in) {
  Corpus corpus;
  std::unordered_set<std::string> seen;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      corpus.push_back(NoteFromJsonLine(line));
    } catch (const Error& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
    if (!seen.insert(corpus.back().id).second) {
      throw ParseError("line " + std::to_string(line_no) + ": duplicate id " +
                       corpus.back().id);
    }
  }
  return corpus;
}

Corpus ReadCorpusFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  try {
    return ReadCorpus(in);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void WriteCorpus(std::ostream& out, const Corpus& corpus) {
  for (const NoteRecord& note : corpus) out << NoteToJsonLine(note) << '\n';
}

void WriteCorpusFile(const std::filesystem::path& path, const Corpus& corpus) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  WriteCorpus(out, corpus);
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace lppa
