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

#ifndef LPPA_EVAL_H_
#define LPPA_EVAL_H_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lppa/entity_type.h"
#include "lppa/normalize.h"
#include "lppa/phi_dictionary.h"
#include "lppa/ttest.h"

namespace lppa {

struct MatchCount {
  std::size_t tp = 0;
  std::size_t n_pred = 0;
  std::size_t n_gold = 0;
  friend bool operator==(const MatchCount&, const MatchCount&) = default;
};

using TypeCounts = std::array<MatchCount, kNumEntityTypes>;

// Per category: tp is the size of the multiset intersection of normalized
// gold and predicted mentions.
TypeCounts MatchCounts(const PhiDictionary& gold, const PhiDictionary& pred,
                       const NormalizationPolicy& policy = {});

struct ScoreTriple {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;

  // F1 = 2PR / (P + R), or 0 when P + R = 0.
  static ScoreTriple FromPR(double precision, double recall);
  // P = tp / n_pred and R = tp / n_gold, each 0 when its denominator is 0.
  static ScoreTriple FromCounts(const MatchCount& c);
};

struct NoteScore {
  // Empty for categories with neither gold nor predicted mentions.
  std::array<std::optional<ScoreTriple>, kNumEntityTypes> per_type;
  // Micro-averaged over the note's categories. A note with no gold and no
  // predictions scores (1, 1, 1).
  ScoreTriple overall;
  TypeCounts counts;
};

NoteScore ScoreNote(const PhiDictionary& gold, const PhiDictionary& pred,
                    const NormalizationPolicy& policy = {});

struct EvalReport {
  // Empty (rendered "/") when the system predicted nothing of that type in
  // the whole corpus; otherwise the mean over notes where the type scores.
  std::array<std::optional<ScoreTriple>, kNumEntityTypes> per_type;
  ScoreTriple overall;
  std::vector<double> per_note_overall_f1;
  std::size_t n_notes = 0;
  // Corpus totals, used to pick report columns.
  std::array<std::size_t, kNumEntityTypes> gold_mentions{};
  std::array<std::size_t, kNumEntityTypes> pred_mentions{};
};

using GoldPredPair = std::pair<PhiDictionary, PhiDictionary>;

// Macro average over notes. Throws EmptyCorpus.
EvalReport ScoreCorpus(const std::vector<GoldPredPair>& pairs,
                       const NormalizationPolicy& policy = {});

// {"per_type":{TYPE:{"pr","re","f1"}|null,...},"overall":{...},"n_notes":N}
std::string ReportToJson(const EvalReport& report);

struct NamedReport {
  std::string name;
  EvalReport report;
};

// '|'-delimited table with one row per system and Pr/Re/F1 per column group
// (Overall, then each category that has gold mentions or predictions).
// ABSENT cells show "/". The Overall F1 cell carries a "*" when the paired
// t-test on per-note F1 against `baseline` is significant; single-note
// reports never get one. Throws UnknownBaseline, and LengthMismatch when
// reports cover different numbers of notes.
std::string RenderReport(const std::vector<NamedReport>& reports,
                         const std::string& baseline);

}  // namespace lppa

#endif  // LPPA_EVAL_H_
