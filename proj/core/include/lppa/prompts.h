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

#ifndef LPPA_PROMPTS_H_
#define LPPA_PROMPTS_H_

#include <string_view>

// Fixed prompt text. Builders in annotator.h and synth.h assemble requests
// from these pieces; nothing else should edit them.
namespace lppa::prompts {

// Annotation (instruction-tuning) prompt.
extern const std::string_view kTaskSystem;
// User message prefix. The note is appended directly after it.
extern const std::string_view kTaskUserPrefix;

// Example-guided generation prompt.
extern const std::string_view kAegSystem;
extern const std::string_view kAegUser;

// Structured-record generation prompt. The user message is
//   kSpiUserHead + <patient dict> + "\n"
//   + for each section: <NAME> "\n" <dict> "\n"
//   + kSpiUserMiddle + <exemplar> + kSpiUserTail
extern const std::string_view kSpiSystem;
extern const std::string_view kSpiUserHead;
extern const std::string_view kSpiUserMiddle;
extern const std::string_view kSpiUserTail;

}  // namespace lppa::prompts

#endif  // LPPA_PROMPTS_H_
