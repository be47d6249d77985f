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

#include "lppa/eval.h"

#include <cstdio>
#include <map>
#include <sstream>

#include "json.hpp"
#include "lppa/errors.h"

namespace lppa {
namespace {

using nlohmann::ordered_json;

std::map<std::string, std::size_t> Multiset(
    const std::vector<std::string>& mentions,
    const NormalizationPolicy& policy) {
  std::map<std::string, std::size_t> counts;
  for (const std::string& m : mentions) ++counts[NormalizeMention(m, policy)];
  return counts;
}

ordered_json TripleJson(const ScoreTriple& s) {
  return ordered_json{{"pr", s.precision}, {"re", s.recall}, {"f1", s.f1}};
}

std::string Fixed2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

TypeCounts MatchCounts(const PhiDictionary& gold, const PhiDictionary& pred,
                       const NormalizationPolicy& policy) {
  TypeCounts out;
  for (EntityType t : kAllEntityTypes) {
    MatchCount& c = out[Index(t)];
    c.n_gold = gold.mentions(t).size();
    c.n_pred = pred.mentions(t).size();
    if (c.n_gold == 0 || c.n_pred == 0) continue;
    auto g = Multiset(gold.mentions(t), policy);
    auto p = Multiset(pred.mentions(t), policy);
    for (const auto& [mention, n] : p) {
      auto it = g.find(mention);
      if (it != g.end()) c.tp += std::min(n, it->second);
    }
  }
  return out;
}

ScoreTriple ScoreTriple::FromPR(double precision, double recall) {
  ScoreTriple s{precision, recall, 0.0};
  if (precision + recall > 0.0) {
    s.f1 = 2.0 * precision * recall / (precision + recall);
  }
  return s;
}

ScoreTriple ScoreTriple::FromCounts(const MatchCount& c) {
  double p = c.n_pred > 0 ? static_cast<double>(c.tp) / c.n_pred : 0.0;
  double r = c.n_gold > 0 ? static_cast<double>(c.tp) / c.n_gold : 0.0;
  return FromPR(p, r);
}

NoteScore ScoreNote(const PhiDictionary& gold, const PhiDictionary& pred,
                    const NormalizationPolicy& policy) {
  NoteScore score;
  score.counts = MatchCounts(gold, pred, policy);
  MatchCount total;
  for (EntityType t : kAllEntityTypes) {
    const MatchCount& c = score.counts[Index(t)];
    total.tp += c.tp;
    total.n_pred += c.n_pred;
    total.n_gold += c.n_gold;
    if (c.n_gold == 0 && c.n_pred == 0) continue;
    score.per_type[Index(t)] = ScoreTriple::FromCounts(c);
  }
  score.overall = (total.n_gold == 0 && total.n_pred == 0)
                      ? ScoreTriple{1.0, 1.0, 1.0}
                      : ScoreTriple::FromCounts(total);
  return score;
}

EvalReport ScoreCorpus(const std::vector<GoldPredPair>& pairs,
                       const NormalizationPolicy& policy) {
  if (pairs.empty()) throw EmptyCorpus("cannot score an empty corpus");
  EvalReport report;
  report.n_notes = pairs.size();

  std::array<ScoreTriple, kNumEntityTypes> sums{};
  std::array<std::size_t, kNumEntityTypes> scored{};
  ScoreTriple overall_sum;
  for (const auto& [gold, pred] : pairs) {
    NoteScore note = ScoreNote(gold, pred, policy);
    for (EntityType t : kAllEntityTypes) {
      const std::size_t i = Index(t);
      report.gold_mentions[i] += note.counts[i].n_gold;
      report.pred_mentions[i] += note.counts[i].n_pred;
      if (!note.per_type[i]) continue;
      sums[i].precision += note.per_type[i]->precision;
      sums[i].recall += note.per_type[i]->recall;
      sums[i].f1 += note.per_type[i]->f1;
      ++scored[i];
    }
    overall_sum.precision += note.overall.precision;
    overall_sum.recall += note.overall.recall;
    overall_sum.f1 += note.overall.f1;
    report.per_note_overall_f1.push_back(note.overall.f1);
  }

  const double n = static_cast<double>(pairs.size());
  report.overall = ScoreTriple{overall_sum.precision / n,
                               overall_sum.recall / n, overall_sum.f1 / n};
  for (EntityType t : kAllEntityTypes) {
    const std::size_t i = Index(t);
    if (report.pred_mentions[i] == 0 || scored[i] == 0) continue;
    const double k = static_cast<double>(scored[i]);
    report.per_type[i] =
        ScoreTriple{sums[i].precision / k, sums[i].recall / k, sums[i].f1 / k};
  }
  return report;
}

std::string ReportToJson(const EvalReport& report) {
  ordered_json j;
  ordered_json per_type = ordered_json::object();
  for (EntityType t : kAllEntityTypes) {
    const auto& s = report.per_type[Index(t)];
    per_type[std::string(EntityTypeName(t))] =
        s ? TripleJson(*s) : ordered_json(nullptr);
  }
  j["per_type"] = std::move(per_type);
  j["overall"] = TripleJson(report.overall);
  j["n_notes"] = report.n_notes;
  return j.dump(2);
}

std::string RenderReport(const std::vector<NamedReport>& reports,
                         const std::string& baseline) {
  const NamedReport* base = nullptr;
  for (const NamedReport& r : reports) {
    if (r.name == baseline) base = &r;
  }
  if (!base) throw UnknownBaseline("baseline '" + baseline + "' not found");

  std::vector<EntityType> columns;
  for (EntityType t : kAllEntityTypes) {
    for (const NamedReport& r : reports) {
      if (r.report.gold_mentions[Index(t)] > 0 ||
          r.report.pred_mentions[Index(t)] > 0) {
        columns.push_back(t);
        break;
      }
    }
  }

  std::ostringstream out;
  out << "| Model | Overall Pr | Overall Re | Overall F1";
  for (EntityType t : columns) {
    const std::string name(EntityTypeName(t));
    out << " | " << name << " Pr | " << name << " Re | " << name << " F1";
  }
  out << " |\n|---|---|---|---";
  for (std::size_t i = 0; i < columns.size(); ++i) out << "|---|---|---";
  out << "|\n";

  for (const NamedReport& r : reports) {
    // A single note cannot be tested; it simply gets no star.
    TTestResult test;
    if (r.report.per_note_overall_f1.size() >= 2 ||
        r.report.per_note_overall_f1.size() !=
            base->report.per_note_overall_f1.size()) {
      test = PairedTTest(r.report.per_note_overall_f1,
                         base->report.per_note_overall_f1);
    }
    const ScoreTriple& o = r.report.overall;
    out << "| " << r.name << " | " << Fixed2(o.precision) << " | "
        << Fixed2(o.recall) << " | " << Fixed2(o.f1)
        << (test.significant ? "*" : "");
    for (EntityType t : columns) {
      const auto& s = r.report.per_type[Index(t)];
      if (s) {
        out << " | " << Fixed2(s->precision) << " | " << Fixed2(s->recall)
            << " | " << Fixed2(s->f1);
      } else {
        out << " | / | / | /";
      }
    }
    out << " |\n";
  }
  return out.str();
}

}  // namespace lppa
