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

#ifndef LPPA_SYNTHQUAL_H_
#define LPPA_SYNTHQUAL_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace lppa {

using Tokens = std::vector<std::string>;

// Lowercases, splits on whitespace and emits every ASCII punctuation
// character as its own token.
Tokens Tokenize(std::string_view text);

std::vector<Tokens> TokenizeAll(std::span<const std::string> notes);

inline constexpr int kDefaultBleuOrder = 4;
inline constexpr double kBleuEpsilon = 1e-9;

// Mean over notes of BLEU(note, every other note). Clipping uses the largest
// count of an n-gram in any single reference and the brevity penalty uses
// the reference length closest to the hypothesis. A zero match count at
// some order becomes epsilon / total. Orders longer than the hypothesis are
// left out of the geometric mean, and an empty hypothesis scores 0.
// Throws TooFewNotes for fewer than two notes.
double SelfBleu(std::span<const std::string> notes,
                int max_n = kDefaultBleuOrder, int parallelism = 1);
double SelfBleuTokens(std::span<const Tokens> notes,
                      int max_n = kDefaultBleuOrder, int parallelism = 1);

// Base-2 Shannon entropy of the pooled unigram distribution. Throws
// EmptyCorpus when there are no tokens.
double CorpusEntropy(std::span<const std::string> notes);

inline constexpr std::string_view kUnknownToken = "<unk>";
inline constexpr std::string_view kBosToken = "<s>";

// Additive-k smoothed n-gram model:
//   p(w | h) = (c(h, w) + k) / (c(h) + k V)
// where h is the previous order - 1 tokens (padded with <s>) and V counts
// the training types plus <unk>. Unseen tokens are scored as <unk>.
class NGramLM {
 public:
  static constexpr int kDefaultOrder = 2;
  static constexpr double kDefaultK = 0.1;

  // Throws EmptyCorpus when the reference has no tokens and
  // invalid_argument for order < 1 or k <= 0.
  static NGramLM Train(std::span<const Tokens> reference,
                       int order = kDefaultOrder, double k = kDefaultK);
  // A model with the given vocabulary and no counts; every token then has
  // probability 1 / V in every context.
  static NGramLM FromVocabulary(std::span<const std::string> vocabulary,
                                int order = kDefaultOrder,
                                double k = kDefaultK);

  int order() const { return order_; }
  double smoothing_k() const { return k_; }
  std::size_t vocab_size() const { return ids_.size(); }
  bool Contains(std::string_view token) const;

  // `history` may be longer than order - 1; only its tail is used, and a
  // short history is padded with <s>.
  double Probability(std::span<const std::string> history,
                     std::string_view word) const;

  // Sum of ln p over every token of `tokens`.
  double LogProb(std::span<const std::string> tokens) const;

 private:
  NGramLM(int order, double k) : order_(order), k_(k) {}
  std::uint32_t IdOf(std::string_view token) const;
  void Intern(std::string_view token);
  double ProbabilityIds(const std::uint32_t* history,
                        std::uint32_t word) const;

  int order_;
  double k_;
  std::unordered_map<std::string, std::uint32_t> ids_;
  // Keys are raw id sequences: history + word, and history alone.
  std::unordered_map<std::string, std::uint64_t> ngram_counts_;
  std::unordered_map<std::string, std::uint64_t> history_counts_;

  static constexpr std::uint32_t kBosId = 0xffffffffu;
};

// Source of corpus perplexity. The n-gram model is the built-in backend; an
// external scorer can be plugged in behind the same interface.
class PerplexityScorer {
 public:
  virtual ~PerplexityScorer() = default;
  virtual double Perplexity(std::span<const Tokens> corpus) const = 0;
};

class NGramPerplexity : public PerplexityScorer {
 public:
  explicit NGramPerplexity(NGramLM lm) : lm_(std::move(lm)) {}
  double Perplexity(std::span<const Tokens> corpus) const override;
  const NGramLM& lm() const { return lm_; }

 private:
  NGramLM lm_;
};

// exp(-(1/N) sum ln p) over all N tokens of the corpus. Throws EmptyCorpus.
double Perplexity(std::span<const Tokens> corpus, const NGramLM& lm);

// Flat term list standing in for a medical ontology. Terms are matched case
// insensitively at word boundaries, longest first.
class Ontology {
 public:
  // Throws EmptyOntology when no non-blank term remains.
  explicit Ontology(std::span<const std::string> terms);

  std::size_t size() const { return size_; }
  // Non-overlapping matches scanning left to right; each is the lowercased
  // term.
  std::vector<std::string> ExtractTerms(std::string_view text) const;
  bool Matches(std::string_view text) const;

 private:
  // Terms grouped by first byte, longest first.
  std::vector<std::string> by_first_[256];
  std::size_t size_ = 0;

  std::size_t LongestAt(std::string_view lowered, std::size_t pos,
                        const std::string** term) const;
};

// One term per line; blank lines and '#' comments are skipped. Throws
// IoError or EmptyOntology.
Ontology LoadOntology(const std::string& path);

// Fraction of notes with at least one ontology match. Throws EmptyCorpus.
double MedicalPlausibility(std::span<const std::string> notes,
                           const Ontology& ontology);

struct QualityReport {
  double self_bleu = 0.0;
  double perplexity = 0.0;
  double entropy_bits = 0.0;
  double plausibility = 0.0;
  std::size_t n_notes = 0;
};

struct QualityOptions {
  int bleu_order = kDefaultBleuOrder;
  int parallelism = 1;
};

QualityReport EvaluateQuality(std::span<const std::string> notes,
                              const PerplexityScorer& scorer,
                              const Ontology& ontology,
                              const QualityOptions& options = {});

// {"bleu":..,"perplexity":..,"entropy":..,"plausibility":..,"n_notes":..}
std::string QualityReportToJson(const QualityReport& report);

}  // namespace lppa

#endif  // LPPA_SYNTHQUAL_H_
