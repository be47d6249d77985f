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

#include "lppa/rule_tagger.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <tuple>
#include <unordered_map>

#include <boost/regex.hpp>

#include "lppa/errors.h"
#include "lppa/text.h"

namespace lppa {

namespace {

struct CompiledPattern {
  PatternRule rule;
  boost::regex regex;
};

struct Term {
  std::string lower;
  EntityType type;
  int priority;
};

struct Candidate {
  TaggedSpan span;
  std::size_t rule_index;
  bool from_dictionary;
};

std::string_view LeadingWord(std::string_view s) {
  std::size_t n = 0;
  while (n < s.size() && text::IsWordChar(s[n])) ++n;
  return s.substr(0, n);
}

std::vector<std::string> SplitTabs(const std::string& line, int max_fields) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (static_cast<int>(fields.size()) + 1 < max_fields) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string::npos) break;
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  fields.push_back(line.substr(start));
  return fields;
}

}  // namespace

struct Ruleset::Impl {
  std::vector<CompiledPattern> patterns;
  std::vector<PatternRule> rules;
  // Keyed by the lowercase leading word of each term; longest term first.
  std::unordered_map<std::string, std::vector<Term>> terms;
  std::size_t term_count = 0;
  std::array<bool, kNumEntityTypes> has_dictionary{};
};

Ruleset::Ruleset() : impl_(std::make_shared<Impl>()) {}
Ruleset::~Ruleset() = default;
Ruleset::Ruleset(const Ruleset&) = default;
Ruleset& Ruleset::operator=(const Ruleset&) = default;
Ruleset::Ruleset(Ruleset&&) noexcept = default;
Ruleset& Ruleset::operator=(Ruleset&&) noexcept = default;

void Ruleset::AddPattern(PatternRule rule, std::string_view origin, int line) {
  auto impl = std::make_shared<Impl>(*impl_);
  try {
    boost::regex re(rule.expression, boost::regex::perl);
    impl->patterns.push_back(CompiledPattern{rule, std::move(re)});
  } catch (const boost::regex_error& e) {
    throw PatternCompileError(std::string(origin), line,
                              "invalid expression '" + rule.expression +
                                  "': " + e.what());
  }
  impl->rules.push_back(std::move(rule));
  impl_ = std::move(impl);
}

void Ruleset::AddTerms(EntityType type, const std::vector<std::string>& terms,
                       int priority) {
  auto impl = std::make_shared<Impl>(*impl_);
  for (const std::string& raw : terms) {
    std::string lower = text::AsciiLower(text::Trim(raw));
    if (lower.empty()) continue;
    std::string key(LeadingWord(lower));
    auto& bucket = impl->terms[key];
    bucket.push_back(Term{std::move(lower), type, priority});
    ++impl->term_count;
  }
  for (auto& [key, bucket] : impl->terms) {
    std::stable_sort(bucket.begin(), bucket.end(),
                     [](const Term& a, const Term& b) {
                       return a.lower.size() > b.lower.size();
                     });
  }
  impl->has_dictionary[Index(type)] = true;
  impl_ = std::move(impl);
}

std::size_t Ruleset::pattern_count() const { return impl_->patterns.size(); }
std::size_t Ruleset::term_count() const { return impl_->term_count; }
const std::vector<PatternRule>& Ruleset::patterns() const {
  return impl_->rules;
}

bool Ruleset::HasPatternFor(EntityType type) const {
  return std::any_of(impl_->rules.begin(), impl_->rules.end(),
                     [type](const PatternRule& r) { return r.type == type; });
}

bool Ruleset::HasDictionaryFor(EntityType type) const {
  return impl_->has_dictionary[Index(type)];
}

std::vector<TaggedSpan> Ruleset::Scan(std::string_view text) const {
  std::vector<Candidate> candidates;
  const char* begin = text.data();
  const char* end = text.data() + text.size();

  for (std::size_t r = 0; r < impl_->patterns.size(); ++r) {
    const CompiledPattern& p = impl_->patterns[r];
    for (boost::cregex_iterator it(begin, end, p.regex), last; it != last;
         ++it) {
      const boost::cmatch& m = *it;
      const auto& group = (m.size() > 1 && m[1].matched) ? m[1] : m[0];
      if (group.length() == 0) continue;
      std::size_t b = static_cast<std::size_t>(group.first - begin);
      std::size_t e = b + static_cast<std::size_t>(group.length());
      candidates.push_back(
          Candidate{TaggedSpan{p.rule.type, b, e, p.rule.priority}, r, false});
    }
  }

  if (!impl_->terms.empty()) {
    std::string lower = text::AsciiLower(text);
    for (std::size_t i = 0; i < lower.size(); ++i) {
      if (!text::IsWordChar(lower[i])) continue;
      if (i > 0 && text::IsWordChar(lower[i - 1])) continue;
      std::string key(LeadingWord(std::string_view(lower).substr(i)));
      auto found = impl_->terms.find(key);
      if (found == impl_->terms.end()) continue;
      for (const Term& term : found->second) {
        std::size_t e = i + term.lower.size();
        if (e > lower.size()) continue;
        if (lower.compare(i, term.lower.size(), term.lower) != 0) continue;
        if (text::IsWordChar(term.lower.back()) && e < lower.size() &&
            text::IsWordChar(lower[e])) {
          continue;
        }
        candidates.push_back(Candidate{
            TaggedSpan{term.type, i, e, term.priority}, SIZE_MAX, true});
      }
    }
  }

  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& a, const Candidate& b) {
              std::size_t la = a.span.end - a.span.begin;
              std::size_t lb = b.span.end - b.span.begin;
              return std::make_tuple(-a.span.priority, -static_cast<long>(la),
                                     a.span.begin, Index(a.span.type),
                                     a.rule_index) <
                     std::make_tuple(-b.span.priority, -static_cast<long>(lb),
                                     b.span.begin, Index(b.span.type),
                                     b.rule_index);
            });

  std::vector<bool> taken(text.size(), false);
  std::vector<Candidate> accepted;
  for (const Candidate& c : candidates) {
    bool free = true;
    for (std::size_t i = c.span.begin; i < c.span.end && free; ++i) {
      free = !taken[i];
    }
    if (!free) continue;
    std::fill(taken.begin() + c.span.begin, taken.begin() + c.span.end, true);
    accepted.push_back(c);
  }
  std::sort(accepted.begin(), accepted.end(),
            [](const Candidate& a, const Candidate& b) {
              return a.span.begin < b.span.begin;
            });

  // Consecutive dictionary hits of one category separated by a single space
  // form one mention ("Isla" + "Wilson").
  std::vector<TaggedSpan> spans;
  bool last_from_dictionary = false;
  for (const Candidate& c : accepted) {
    if (!spans.empty() && last_from_dictionary && c.from_dictionary &&
        spans.back().type == c.span.type &&
        c.span.begin == spans.back().end + 1 && text[spans.back().end] == ' ') {
      spans.back().end = c.span.end;
      continue;
    }
    spans.push_back(c.span);
    last_from_dictionary = c.from_dictionary;
  }
  return spans;
}

Ruleset LoadRuleset(const std::filesystem::path& pattern_file,
                    const std::filesystem::path& dictionary_dir) {
  Ruleset rules;
  std::ifstream in(pattern_file);
  if (!in) throw IoError("cannot open pattern file " + pattern_file.string());
  const std::string origin = pattern_file.string();
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string_view trimmed = text::Trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    std::vector<std::string> fields = SplitTabs(line, 3);
    if (fields.size() != 3) {
      throw PatternCompileError(origin, line_no,
                                "expected TYPE<TAB>priority<TAB>expression");
    }
    std::optional<EntityType> type =
        EntityTypeFromName(std::string(text::Trim(fields[0])));
    if (!type) {
      throw PatternCompileError(origin, line_no,
                                "unknown entity type '" + fields[0] + "'");
    }
    std::string_view prio_text = text::Trim(fields[1]);
    int priority = 0;
    auto [ptr, ec] = std::from_chars(
        prio_text.data(), prio_text.data() + prio_text.size(), priority);
    if (ec != std::errc() || ptr != prio_text.data() + prio_text.size()) {
      throw PatternCompileError(origin, line_no,
                                "bad priority '" + fields[1] + "'");
    }
    rules.AddPattern(PatternRule{*type, priority, fields[2]}, origin, line_no);
  }

  if (dictionary_dir.empty()) return rules;
  if (!std::filesystem::is_directory(dictionary_dir)) {
    throw IoError("dictionary directory not found: " + dictionary_dir.string());
  }
  for (EntityType type : kAllEntityTypes) {
    auto path = dictionary_dir / (std::string(EntityTypeName(type)) + ".txt");
    if (!std::filesystem::exists(path)) continue;
    std::ifstream terms_in(path);
    if (!terms_in) throw IoError("cannot open " + path.string());
    std::vector<std::string> terms;
    while (std::getline(terms_in, line)) {
      std::string_view t = text::Trim(line);
      if (t.empty() || t.front() == '#') continue;
      terms.emplace_back(t);
    }
    rules.AddTerms(type, terms);
  }
  return rules;
}

Ruleset LoadDefaultRuleset(const std::filesystem::path& data_dir) {
  return LoadRuleset(data_dir / "rules" / "patterns.tsv",
                     data_dir / "rules" / "dictionaries");
}

PhiDictionary TagText(std::string_view text, const Ruleset& rules) {
  PhiDictionary out;
  for (const TaggedSpan& s : rules.Scan(text)) {
    std::string mention(text.substr(s.begin, s.end - s.begin));
    if (text::Trim(mention).empty()) continue;
    out.Add(s.type, std::move(mention));
  }
  return out;
}

PhiDictionary TagNote(const NoteRecord& note, const Ruleset& rules) {
  return TagText(note.text, rules);
}

}  // namespace lppa
