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

#include "lppa/deid.h"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

#include "lppa/text.h"

namespace lppa {
namespace {

constexpr std::string_view kPlaceholder = "{TYPE}";

struct Mention {
  EntityType type;
  std::string text;
};

// Distinct (type, mention) pairs, longest first, then category order.
std::vector<Mention> OrderedMentions(const PhiDictionary& phi) {
  std::vector<Mention> out;
  std::set<std::pair<EntityType, std::string>> seen;
  for (EntityType t : kAllEntityTypes) {
    for (const std::string& m : phi.mentions(t)) {
      if (seen.emplace(t, m).second) out.push_back(Mention{t, m});
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const Mention& a, const Mention& b) {
    if (a.text.size() != b.text.size()) return a.text.size() > b.text.size();
    return Index(a.type) < Index(b.type);
  });
  return out;
}

// Tracks which bytes are already claimed, and which of those belong to
// labels.
class Coverage {
 public:
  explicit Coverage(std::size_t n) : covered_(n, false), label_(n, false) {}

  bool Overlaps(std::size_t b, std::size_t e) const {
    for (std::size_t i = b; i < e; ++i) {
      if (covered_[i]) return true;
    }
    return false;
  }
  void Claim(std::size_t b, std::size_t e, bool is_label) {
    for (std::size_t i = b; i < e; ++i) {
      covered_[i] = true;
      if (is_label) label_[i] = true;
    }
  }
  bool IsLabel(std::size_t i) const { return label_[i]; }

 private:
  std::vector<bool> covered_;
  std::vector<bool> label_;
};

class Matcher {
 public:
  Matcher(std::string_view text, const DeidPolicy& policy,
          const Coverage& coverage)
      : text_(text), policy_(policy), coverage_(coverage) {}

  // Next occurrence of `m` at or after `from` that satisfies the boundary
  // rule; npos when none.
  std::size_t Find(std::string_view m, std::size_t from) const {
    while (true) {
      std::size_t p = policy_.case_insensitive
                          ? text::FindIgnoreCase(text_, m, from)
                          : text_.find(m, from);
      if (p == std::string_view::npos) return p;
      if (BoundaryOk(m, p)) return p;
      from = p + 1;
    }
  }

 private:
  // Label bytes count as word characters so a label never creates a new
  // boundary next to a mention.
  bool WordAt(std::size_t i) const {
    return text::IsWordChar(text_[i]) || coverage_.IsLabel(i);
  }

  bool BoundaryOk(std::string_view m, std::size_t p) const {
    if (!policy_.word_boundary) return true;
    if (!text::IsAsciiAlnum(m.front()) || !text::IsAsciiAlnum(m.back())) {
      return true;
    }
    if (p > 0 && WordAt(p - 1)) return false;
    std::size_t e = p + m.size();
    if (e < text_.size() && WordAt(e)) return false;
    return true;
  }

  std::string_view text_;
  const DeidPolicy& policy_;
  const Coverage& coverage_;
};

void ProtectLabels(std::string_view text, const DeidPolicy& policy,
                   Coverage& coverage) {
  for (EntityType t : kAllEntityTypes) {
    std::string label = policy.Label(t);
    for (std::size_t p = text.find(label); p != std::string_view::npos;
         p = text.find(label, p + label.size())) {
      coverage.Claim(p, p + label.size(), /*is_label=*/true);
    }
  }
}

}  // namespace

void DeidPolicy::Validate() const {
  std::size_t first = label_format.find(kPlaceholder);
  if (first == std::string::npos ||
      label_format.find(kPlaceholder, first + 1) != std::string::npos) {
    throw std::invalid_argument("label format must contain {TYPE} exactly once");
  }
}

std::string DeidPolicy::Label(EntityType type) const {
  std::string out = label_format;
  std::size_t p = out.find(kPlaceholder);
  if (p != std::string::npos) {
    out.replace(p, kPlaceholder.size(), EntityTypeName(type));
  }
  return out;
}

DeidentifiedNote Deidentify(std::string_view text, const PhiDictionary& phi,
                            const DeidPolicy& policy) {
  policy.Validate();
  Coverage coverage(text.size());
  ProtectLabels(text, policy, coverage);
  Matcher matcher(text, policy, coverage);

  DeidentifiedNote out;
  for (const Mention& m : OrderedMentions(phi)) {
    bool found_any = false;
    for (std::size_t p = matcher.Find(m.text, 0); p != std::string_view::npos;) {
      found_any = true;
      std::size_t e = p + m.text.size();
      if (coverage.Overlaps(p, e)) {
        p = matcher.Find(m.text, p + 1);
        continue;
      }
      coverage.Claim(p, e, /*is_label=*/false);
      out.replacements.push_back(
          Replacement{std::string(text.substr(p, e - p)), m.type, p, e});
      p = matcher.Find(m.text, e);
    }
    if (!found_any) out.residuals.push_back(Residual{m.type, m.text});
  }

  std::sort(out.replacements.begin(), out.replacements.end(),
            [](const Replacement& a, const Replacement& b) {
              return a.start < b.start;
            });
  std::size_t cursor = 0;
  for (const Replacement& r : out.replacements) {
    out.text.append(text.substr(cursor, r.start - cursor));
    out.text.append(policy.Label(r.type));
    cursor = r.end;
  }
  out.text.append(text.substr(cursor));
  return out;
}

std::vector<LeakFinding> VerifyClean(const DeidentifiedNote& deid,
                                     const PhiDictionary& phi,
                                     const DeidPolicy& policy) {
  policy.Validate();
  Coverage coverage(deid.text.size());
  ProtectLabels(deid.text, policy, coverage);
  Matcher matcher(deid.text, policy, coverage);

  std::vector<LeakFinding> findings;
  for (const Mention& m : OrderedMentions(phi)) {
    for (std::size_t p = matcher.Find(m.text, 0); p != std::string::npos;
         p = matcher.Find(m.text, p + 1)) {
      if (coverage.Overlaps(p, p + m.text.size())) continue;
      findings.push_back(LeakFinding{m.type, m.text, p});
    }
  }
  for (const Residual& r : deid.residuals) {
    findings.push_back(LeakFinding{r.type, r.mention, std::nullopt});
  }
  return findings;
}

}  // namespace lppa
