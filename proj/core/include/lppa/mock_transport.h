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

#ifndef LPPA_MOCK_TRANSPORT_H_
#define LPPA_MOCK_TRANSPORT_H_

#include <atomic>
#include <memory>
#include <string>

#include "lppa/chat.h"
#include "lppa/rule_tagger.h"

namespace lppa {

// Offline stand-in for a chat endpoint. Replies are a pure function of the
// request (including its seed), so runs are reproducible at any
// concurrency:
//  - annotation prompts get the rule tagger's dictionary for the note,
//  - example-guided prompts get a templated note with invented PHI,
//  - structured-record prompts get a note that uses the name, phone and
//    address from the PATIENT INFORMATION block.
// Generation replies use the "Clinical note: ... PHI: {...}" answer format.
class SyntheticTransport : public ChatTransport {
 public:
  explicit SyntheticTransport(Ruleset rules);
  std::string Complete(const ChatRequest& request) override;
  std::string destination() const override { return "mock"; }
  long calls() const { return calls_.load(); }

 private:
  Ruleset rules_;
  std::atomic<long> calls_{0};
};

}  // namespace lppa

#endif  // LPPA_MOCK_TRANSPORT_H_
