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

#include "lppa/synthqual.h"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "json.hpp"
#include "lppa/errors.h"
#include "lppa/parallel.h"
#include "lppa/text.h"

namespace lppa {
namespace {

using Key = std::string;

void AppendId(Key* key, std::uint32_t id) {
  char bytes[sizeof id];
  std::memcpy(bytes, &id, sizeof id);
  key->append(bytes, sizeof id);
}

Key MakeKey(const std::uint32_t* ids, std::size_t n) {
  Key key;
  key.reserve(n * sizeof(std::uint32_t));
  for (std::size_t i = 0; i < n; ++i) AppendId(&key, ids[i]);
  return key;
}

// Largest and second largest count of an n-gram over all notes, plus the
// note holding the largest. The best count among "all notes but i" is then
// an O(1) lookup.
struct TopCounts {
  std::uint32_t first = 0;
  std::uint32_t second = 0;
  std::size_t owner = std::numeric_limits<std::size_t>::max();

  void Offer(std::uint32_t count, std::size_t note) {
    if (count > first) {
      second = first;
      first = count;
      owner = note;
    } else if (count > second) {
      second = count;
    }
  }
  std::uint32_t Excluding(std::size_t note) const {
    return owner == note ? second : first;
  }
};

using CountMap = std::unordered_map<Key, std::uint32_t>;

}  // namespace

Tokens Tokenize(std::string_view text) {
  Tokens tokens;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) tokens.push_back(std::move(current));
    current.clear();
  };
  for (char c : text) {
    if (text::IsSpace(c)) {
      flush();
    } else if (text::IsAsciiPunct(c)) {
      flush();
      tokens.emplace_back(1, c);
    } else {
      current.push_back(text::ToLower(c));
    }
  }
  flush();
  return tokens;
}

std::vector<Tokens> TokenizeAll(std::span<const std::string> notes) {
  std::vector<Tokens> out;
  out.reserve(notes.size());
  for (const std::string& note : notes) out.push_back(Tokenize(note));
  return out;
}

double SelfBleu(std::span<const std::string> notes, int max_n,
                int parallelism) {
  std::vector<Tokens> tokens = TokenizeAll(notes);
  return SelfBleuTokens(tokens, max_n, parallelism);
}

double SelfBleuTokens(std::span<const Tokens> notes, int max_n,
                      int parallelism) {
  if (notes.size() < 2) throw TooFewNotes("self-BLEU needs at least 2 notes");
  if (max_n < 1) throw std::invalid_argument("max_n must be >= 1");
  const std::size_t n_notes = notes.size();
  const std::size_t orders = static_cast<std::size_t>(max_n);

  std::unordered_map<std::string_view, std::uint32_t> vocab;
  std::vector<std::vector<std::uint32_t>> ids(n_notes);
  for (std::size_t i = 0; i < n_notes; ++i) {
    ids[i].reserve(notes[i].size());
    for (const std::string& t : notes[i]) {
      auto [it, _] = vocab.emplace(t, static_cast<std::uint32_t>(vocab.size()));
      ids[i].push_back(it->second);
    }
  }

  // counts[i][n - 1] holds the order-n counts of note i.
  std::vector<std::vector<CountMap>> counts(n_notes,
                                            std::vector<CountMap>(orders));
  std::vector<std::unordered_map<Key, TopCounts>> top(orders);
  for (std::size_t i = 0; i < n_notes; ++i) {
    const std::vector<std::uint32_t>& seq = ids[i];
    for (std::size_t n = 1; n <= orders && n <= seq.size(); ++n) {
      CountMap& map = counts[i][n - 1];
      for (std::size_t s = 0; s + n <= seq.size(); ++s) {
        ++map[MakeKey(&seq[s], n)];
      }
      for (const auto& [key, c] : map) top[n - 1][key].Offer(c, i);
    }
  }

  std::vector<std::size_t> sorted_lengths;
  for (const Tokens& t : notes) sorted_lengths.push_back(t.size());
  std::sort(sorted_lengths.begin(), sorted_lengths.end());

  // Closest reference length to c among all notes except one with length
  // own; ties prefer the shorter reference.
  auto closest_ref = [&](std::size_t c) {
    bool skipped = false;
    std::size_t best = 0;
    bool have = false;
    for (std::size_t len : sorted_lengths) {
      if (!skipped && len == c) {
        skipped = true;
        continue;
      }
      if (!have) {
        best = len;
        have = true;
        continue;
      }
      std::size_t d_best = best > c ? best - c : c - best;
      std::size_t d = len > c ? len - c : c - len;
      if (d < d_best) best = len;
    }
    return best;
  };

  std::vector<double> scores(n_notes, 0.0);
  ParallelFor(n_notes, parallelism, [&](std::size_t i) {
    const std::size_t c = ids[i].size();
    if (c == 0) return;
    double log_sum = 0.0;
    std::size_t used = 0;
    for (std::size_t n = 1; n <= orders && n <= c; ++n) {
      const double total = static_cast<double>(c - n + 1);
      std::uint64_t matched = 0;
      for (const auto& [key, count] : counts[i][n - 1]) {
        matched += std::min(count, top[n - 1].at(key).Excluding(i));
      }
      double p = matched > 0 ? static_cast<double>(matched) / total
                             : kBleuEpsilon / total;
      log_sum += std::log(p);
      ++used;
    }
    const double r = static_cast<double>(closest_ref(c));
    const double bp = static_cast<double>(c) > r
                          ? 1.0
                          : std::exp(1.0 - r / static_cast<double>(c));
    scores[i] = bp * std::exp(log_sum / static_cast<double>(used));
  });

  double sum = 0.0;
  for (double s : scores) sum += s;
  return sum / static_cast<double>(n_notes);
}

double CorpusEntropy(std::span<const std::string> notes) {
  std::unordered_map<std::string, std::uint64_t> counts;
  std::uint64_t total = 0;
  for (const std::string& note : notes) {
    for (std::string& t : Tokenize(note)) {
      ++counts[std::move(t)];
      ++total;
    }
  }
  if (total == 0) throw EmptyCorpus("entropy needs at least one token");
  const double n = static_cast<double>(total);
  double h = 0.0;
  for (const auto& [_, c] : counts) {
    const double p = static_cast<double>(c) / n;
    h -= p * std::log2(p);
  }
  return h < 0.0 ? 0.0 : h;
}

NGramLM NGramLM::Train(std::span<const Tokens> reference, int order,
                       double k) {
  NGramLM lm = FromVocabulary({}, order, k);
  std::size_t n_tokens = 0;
  for (const Tokens& t : reference) {
    for (const std::string& w : t) lm.Intern(w);
    n_tokens += t.size();
  }
  if (n_tokens == 0) throw EmptyCorpus("reference corpus has no tokens");

  const std::size_t h = static_cast<std::size_t>(order - 1);
  std::vector<std::uint32_t> seq;
  for (const Tokens& t : reference) {
    seq.assign(h, kBosId);
    for (const std::string& w : t) seq.push_back(lm.IdOf(w));
    for (std::size_t s = h; s < seq.size(); ++s) {
      ++lm.ngram_counts_[MakeKey(&seq[s - h], h + 1)];
      ++lm.history_counts_[MakeKey(&seq[s - h], h)];
    }
  }
  return lm;
}

NGramLM NGramLM::FromVocabulary(std::span<const std::string> vocabulary,
                                int order, double k) {
  if (order < 1) throw std::invalid_argument("order must be >= 1");
  if (!(k > 0.0)) throw std::invalid_argument("smoothing k must be > 0");
  NGramLM lm(order, k);
  lm.Intern(kUnknownToken);
  for (const std::string& w : vocabulary) lm.Intern(w);
  return lm;
}

void NGramLM::Intern(std::string_view token) {
  ids_.emplace(std::string(token), static_cast<std::uint32_t>(ids_.size()));
}

std::uint32_t NGramLM::IdOf(std::string_view token) const {
  auto it = ids_.find(std::string(token));
  if (it == ids_.end()) it = ids_.find(std::string(kUnknownToken));
  return it->second;
}

bool NGramLM::Contains(std::string_view token) const {
  return ids_.contains(std::string(token));
}

double NGramLM::ProbabilityIds(const std::uint32_t* history,
                               std::uint32_t word) const {
  const std::size_t h = static_cast<std::size_t>(order_ - 1);
  Key hist = MakeKey(history, h);
  std::uint64_t c_hist = 0;
  if (auto it = history_counts_.find(hist); it != history_counts_.end()) {
    c_hist = it->second;
  }
  std::uint64_t c_ngram = 0;
  if (c_hist > 0) {
    AppendId(&hist, word);
    if (auto it = ngram_counts_.find(hist); it != ngram_counts_.end()) {
      c_ngram = it->second;
    }
  }
  const double v = static_cast<double>(ids_.size());
  return (static_cast<double>(c_ngram) + k_) /
         (static_cast<double>(c_hist) + k_ * v);
}

double NGramLM::Probability(std::span<const std::string> history,
                            std::string_view word) const {
  const std::size_t h = static_cast<std::size_t>(order_ - 1);
  std::vector<std::uint32_t> ids(h, kBosId);
  const std::size_t take = std::min(h, history.size());
  for (std::size_t i = 0; i < take; ++i) {
    ids[h - take + i] = IdOf(history[history.size() - take + i]);
  }
  return ProbabilityIds(ids.data(), IdOf(word));
}

double NGramLM::LogProb(std::span<const std::string> tokens) const {
  const std::size_t h = static_cast<std::size_t>(order_ - 1);
  std::vector<std::uint32_t> seq(h, kBosId);
  for (const std::string& w : tokens) seq.push_back(IdOf(w));
  double sum = 0.0;
  for (std::size_t s = h; s < seq.size(); ++s) {
    sum += std::log(ProbabilityIds(&seq[s - h], seq[s]));
  }
  return sum;
}

double Perplexity(std::span<const Tokens> corpus, const NGramLM& lm) {
  double log_sum = 0.0;
  std::size_t n = 0;
  for (const Tokens& t : corpus) {
    log_sum += lm.LogProb(t);
    n += t.size();
  }
  if (n == 0) throw EmptyCorpus("perplexity needs at least one token");
  return std::exp(-log_sum / static_cast<double>(n));
}

double NGramPerplexity::Perplexity(std::span<const Tokens> corpus) const {
  return lppa::Perplexity(corpus, lm_);
}

Ontology::Ontology(std::span<const std::string> terms) {
  for (const std::string& raw : terms) {
    std::string term = text::AsciiLower(text::Trim(raw));
    if (term.empty()) continue;
    auto& bucket = by_first_[static_cast<unsigned char>(term[0])];
    if (std::find(bucket.begin(), bucket.end(), term) != bucket.end()) {
      continue;
    }
    bucket.push_back(std::move(term));
    ++size_;
  }
  if (size_ == 0) throw EmptyOntology("ontology has no terms");
  for (auto& bucket : by_first_) {
    std::stable_sort(bucket.begin(), bucket.end(),
                     [](const std::string& a, const std::string& b) {
                       return a.size() > b.size();
                     });
  }
}

std::size_t Ontology::LongestAt(std::string_view lowered, std::size_t pos,
                                const std::string** term) const {
  for (const std::string& t :
       by_first_[static_cast<unsigned char>(lowered[pos])]) {
    if (lowered.compare(pos, t.size(), t) != 0) continue;
    const std::size_t end = pos + t.size();
    const bool needs_boundary = text::IsWordChar(t.back());
    if (needs_boundary && end < lowered.size() &&
        text::IsWordChar(lowered[end])) {
      continue;
    }
    *term = &t;
    return t.size();
  }
  return 0;
}

std::vector<std::string> Ontology::ExtractTerms(std::string_view text) const {
  const std::string lowered = text::AsciiLower(text);
  std::vector<std::string> found;
  std::size_t pos = 0;
  while (pos < lowered.size()) {
    const bool at_start = pos == 0 || !text::IsWordChar(lowered[pos - 1]) ||
                          !text::IsWordChar(lowered[pos]);
    const std::string* term = nullptr;
    std::size_t len = at_start ? LongestAt(lowered, pos, &term) : 0;
    if (len > 0) {
      found.push_back(*term);
      pos += len;
    } else {
      ++pos;
    }
  }
  return found;
}

bool Ontology::Matches(std::string_view text) const {
  return !ExtractTerms(text).empty();
}

Ontology LoadOntology(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open ontology file: " + path);
  std::vector<std::string> terms;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view t = text::Trim(line);
    if (t.empty() || t.front() == '#') continue;
    terms.emplace_back(t);
  }
  return Ontology(terms);
}

double MedicalPlausibility(std::span<const std::string> notes,
                           const Ontology& ontology) {
  if (notes.empty()) throw EmptyCorpus("plausibility needs at least one note");
  std::size_t plausible = 0;
  for (const std::string& note : notes) {
    if (ontology.Matches(note)) ++plausible;
  }
  return static_cast<double>(plausible) / static_cast<double>(notes.size());
}

QualityReport EvaluateQuality(std::span<const std::string> notes,
                              const PerplexityScorer& scorer,
                              const Ontology& ontology,
                              const QualityOptions& options) {
  std::vector<Tokens> tokens = TokenizeAll(notes);
  QualityReport report;
  report.n_notes = notes.size();
  report.self_bleu =
      SelfBleuTokens(tokens, options.bleu_order, options.parallelism);
  report.perplexity = scorer.Perplexity(tokens);
  report.entropy_bits = CorpusEntropy(notes);
  report.plausibility = MedicalPlausibility(notes, ontology);
  return report;
}

std::string QualityReportToJson(const QualityReport& report) {
  nlohmann::ordered_json j;
  j["bleu"] = report.self_bleu;
  j["perplexity"] = report.perplexity;
  j["entropy"] = report.entropy_bits;
  j["plausibility"] = report.plausibility;
  j["n_notes"] = report.n_notes;
  return j.dump(2);
}

}  // namespace lppa
