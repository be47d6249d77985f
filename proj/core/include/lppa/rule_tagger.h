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

#ifndef LPPA_RULE_TAGGER_H_
#define LPPA_RULE_TAGGER_H_

#include <cstddef>
#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "lppa/entity_type.h"
#include "lppa/note.h"
#include "lppa/phi_dictionary.h"

namespace lppa {

// One regular-expression rule. When the expression has capture groups, the
// first group is the emitted mention; otherwise the whole match is.
struct PatternRule {
  EntityType type;
  int priority = 0;
  std::string expression;
};

// A tagged span of the note text, [begin, end) in bytes.
struct TaggedSpan {
  EntityType type;
  std::size_t begin;
  std::size_t end;
  int priority;
};

// Compiled regular expressions plus case-insensitive lookup dictionaries.
// Immutable once built and safe to share across threads.
class Ruleset {
 public:
  // Dictionary hits rank below every pattern unless configured otherwise.
  static constexpr int kDefaultDictionaryPriority = 10;

  Ruleset();
  ~Ruleset();
  Ruleset(const Ruleset&);
  Ruleset& operator=(const Ruleset&);
  Ruleset(Ruleset&&) noexcept;
  Ruleset& operator=(Ruleset&&) noexcept;

  // Throws PatternCompileError (with `origin` and `line`) if the
  // expression does not compile.
  void AddPattern(PatternRule rule, std::string_view origin = "<inline>",
                  int line = 0);
  // Terms are matched case-insensitively, whole-word, longest first.
  void AddTerms(EntityType type, const std::vector<std::string>& terms,
                int priority = kDefaultDictionaryPriority);

  std::size_t pattern_count() const;
  std::size_t term_count() const;
  bool HasPatternFor(EntityType type) const;
  bool HasDictionaryFor(EntityType type) const;
  const std::vector<PatternRule>& patterns() const;

  // All resolved spans in text order. Candidates that overlap are resolved by
  // higher priority, then longer match, then leftmost start.
  std::vector<TaggedSpan> Scan(std::string_view text) const;

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

// Reads a pattern file (TYPE <TAB> priority <TAB> expression per line, '#'
// comments, blank lines ignored) and a directory holding one <TYPE>.txt term
// file per category. `dictionary_dir` may be empty to load patterns only.
// Throws IoError and PatternCompileError.
Ruleset LoadRuleset(const std::filesystem::path& pattern_file,
                    const std::filesystem::path& dictionary_dir);

// The ruleset shipped in data/rules.
Ruleset LoadDefaultRuleset(const std::filesystem::path& data_dir);

PhiDictionary TagText(std::string_view text, const Ruleset& rules);
PhiDictionary TagNote(const NoteRecord& note, const Ruleset& rules);

}  // namespace lppa

#endif  // LPPA_RULE_TAGGER_H_
