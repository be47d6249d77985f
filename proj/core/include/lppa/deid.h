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

#ifndef LPPA_DEID_H_
#define LPPA_DEID_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lppa/entity_type.h"
#include "lppa/phi_dictionary.h"

namespace lppa {

struct DeidPolicy {
  // Must contain "{TYPE}" exactly once.
  std::string label_format = "[{TYPE}]";
  bool case_insensitive = true;
  // Applies to mentions that start and end with an ASCII letter or digit.
  bool word_boundary = true;

  // Throws std::invalid_argument when label_format is malformed.
  void Validate() const;
  std::string Label(EntityType type) const;
};

struct Replacement {
  std::string original;
  EntityType type;
  // Byte offsets into the original text, [start, end).
  std::size_t start;
  std::size_t end;
};

struct Residual {
  EntityType type;
  std::string mention;
};

struct DeidentifiedNote {
  std::string text;
  // Sorted by start, non-overlapping.
  std::vector<Replacement> replacements;
  // Mentions with no occurrence in the text.
  std::vector<Residual> residuals;
};

// Replaces every occurrence of every mention by its type label. Longer
// mentions are placed first (ties broken by category order), so a mention
// contained in a longer one never splits it. Text outside replaced spans is
// copied byte for byte. Label strings already present in the text are left
// alone, which makes the operation idempotent.
DeidentifiedNote Deidentify(std::string_view text, const PhiDictionary& phi,
                            const DeidPolicy& policy = {});

struct LeakFinding {
  EntityType type;
  std::string mention;
  // Byte offset in the de-identified text; empty for mentions that were
  // never located in the original note.
  std::optional<std::size_t> position;
};

// Every remaining occurrence of a PHI mention in `deid.text`, plus each
// residual mention. Empty means clean.
std::vector<LeakFinding> VerifyClean(const DeidentifiedNote& deid,
                                     const PhiDictionary& phi,
                                     const DeidPolicy& policy = {});

}  // namespace lppa

#endif  // LPPA_DEID_H_
