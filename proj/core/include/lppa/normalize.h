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

#ifndef LPPA_NORMALIZE_H_
#define LPPA_NORMALIZE_H_

#include <string>
#include <string_view>

namespace lppa {

struct NormalizationPolicy {
  bool case_fold = true;
  bool collapse_whitespace = true;
  bool strip_edge_punctuation = true;
};

// Trims, then applies the enabled transforms in this order: collapse runs of
// whitespace to one space, ASCII case-fold, strip leading and trailing
// punctuation. Idempotent under every policy.
std::string NormalizeMention(std::string_view s,
                             const NormalizationPolicy& policy);

}  // namespace lppa

#endif  // LPPA_NORMALIZE_H_
