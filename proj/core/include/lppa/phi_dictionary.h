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

#ifndef LPPA_PHI_DICTIONARY_H_
#define LPPA_PHI_DICTIONARY_H_

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "lppa/entity_type.h"

namespace lppa {

// Per-note multiset of PHI surface strings, grouped by category. An empty
// list and an absent key are the same thing.
class PhiDictionary {
 public:
  PhiDictionary() = default;

  const std::vector<std::string>& mentions(EntityType type) const {
    return entries_[Index(type)];
  }

  // Appends one mention. Duplicates are kept.
  void Add(EntityType type, std::string mention);
  void Set(EntityType type, std::vector<std::string> mentions);

  bool empty() const;
  // Total number of mentions across all categories.
  std::size_t size() const;

  friend bool operator==(const PhiDictionary&, const PhiDictionary&) = default;

 private:
  std::array<std::vector<std::string>, kNumEntityTypes> entries_;
};

struct PhiParseResult {
  PhiDictionary dictionary;
  // Repairs applied in lenient mode, in the order they happened.
  std::vector<std::string> warnings;
};

// Parses a model reply into a dictionary.
//
// Strict mode accepts exactly one JSON object whose keys are entity type
// names and whose values are lists of non-blank strings.
//
// Lenient mode repairs, in order: (a) takes the first balanced {...} block
// out of surrounding prose, (b) drops unknown keys, (c) wraps a bare string
// into a one-element list, (d) turns numbers into their decimal text. Null
// values count as empty lists and blank strings are dropped. Each repair is
// reported in `warnings`.
//
// Throws ParseError when no object can be found or it is malformed, and
// SchemaError for schema violations in strict mode.
PhiParseResult ParsePhiDictionary(std::string_view text, bool strict);

// Canonical compact JSON: keys in EntityType order, empty keys omitted.
std::string SerializePhiDictionary(const PhiDictionary& dict);

}  // namespace lppa

#endif  // LPPA_PHI_DICTIONARY_H_
