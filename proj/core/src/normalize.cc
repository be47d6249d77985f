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

#include "lppa/normalize.h"

#include "lppa/text.h"

namespace lppa {

std::string NormalizeMention(std::string_view s,
                             const NormalizationPolicy& policy) {
  std::string_view trimmed = text::Trim(s);
  std::string out;
  out.reserve(trimmed.size());
  if (policy.collapse_whitespace) {
    bool in_space = false;
    for (char c : trimmed) {
      if (text::IsSpace(c)) {
        if (!in_space) out.push_back(' ');
        in_space = true;
      } else {
        out.push_back(c);
        in_space = false;
      }
    }
  } else {
    out.assign(trimmed);
  }
  if (policy.case_fold) {
    for (char& c : out) c = text::ToLower(c);
  }
  if (policy.strip_edge_punctuation) {
    // Whitespace exposed by removing punctuation goes too, otherwise a second
    // pass would trim it.
    auto strippable = [](char c) {
      return text::IsAsciiPunct(c) || text::IsSpace(c);
    };
    std::size_t b = 0;
    std::size_t e = out.size();
    while (b < e && strippable(out[b])) ++b;
    while (e > b && strippable(out[e - 1])) --e;
    out = out.substr(b, e - b);
  }
  return out;
}

}  // namespace lppa
