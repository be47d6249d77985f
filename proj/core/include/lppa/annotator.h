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

#ifndef LPPA_ANNOTATOR_H_
#define LPPA_ANNOTATOR_H_

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lppa/chat.h"
#include "lppa/errors.h"
#include "lppa/note.h"
#include "lppa/parallel.h"
#include "lppa/phi_dictionary.h"

namespace lppa {

struct RetryPolicy {
  int max_attempts = 3;
  // Delay before attempt k (k >= 2) is backoff_base * 2^(k-2).
  std::chrono::milliseconds backoff_base{500};
  // Re-ask when the reply cannot be parsed.
  bool parse_retry = true;

  std::chrono::milliseconds BackoffBefore(int attempt) const;
};

using Sleeper = std::function<void(std::chrono::milliseconds)>;

// Sleeper that really sleeps.
Sleeper RealSleeper();

// The annotation request: fixed system and instruction text with the note
// appended after "Here is the clinical note:". Temperature defaults to 0.
// Throws std::invalid_argument for an empty note.
ChatRequest BuildTaskPrompt(std::string_view note_text,
                            std::string_view model = "");

// Sends `request` and hands each reply to `parse` until it returns without
// throwing ParseError/SchemaError/MissingMarker, or attempts run out.
// Transport errors are retried with backoff and rethrown when attempts run
// out; parse failures end in ExhaustedRetries carrying the last reply.
template <typename Parse>
auto CompleteWithRetry(ChatTransport& transport, const ChatRequest& request,
                       const RetryPolicy& retry, const Sleeper& sleep,
                       Parse&& parse) -> decltype(parse(std::string())) {
  const int attempts = retry.max_attempts < 1 ? 1 : retry.max_attempts;
  std::string last_reply;
  std::string last_error;
  for (int attempt = 1; attempt <= attempts; ++attempt) {
    if (attempt > 1 && sleep) sleep(retry.BackoffBefore(attempt));
    try {
      last_reply = transport.Complete(request);
    } catch (const TransportError&) {
      if (attempt == attempts) throw;
      continue;
    }
    try {
      return parse(last_reply);
    } catch (const ParseError& e) {
      last_error = e.what();
    } catch (const SchemaError& e) {
      last_error = e.what();
    } catch (const MissingMarker& e) {
      last_error = e.what();
    }
    if (!retry.parse_retry) break;
  }
  throw ExhaustedRetries("no usable reply: " + last_error, last_reply);
}

struct Annotation {
  PhiDictionary phi;
  // Lenient-parse repairs, kept for the audit log.
  std::vector<std::string> repairs;
  int attempts = 1;
};

class Annotator {
 public:
  Annotator(ChatTransport& transport, RetryPolicy retry, std::string model = "",
            Sleeper sleep = RealSleeper());

  // Throws TransportError or ExhaustedRetries.
  Annotation Annotate(const NoteRecord& note) const;

 private:
  ChatTransport& transport_;
  RetryPolicy retry_;
  std::string model_;
  Sleeper sleep_;
};

struct AnnotationOutcome {
  std::string id;
  std::optional<Annotation> annotation;
  // Set when annotation failed.
  std::string error;
  bool ok() const { return annotation.has_value(); }
};

// Annotates every note with at most `parallelism` requests in flight.
// result[i] always corresponds to notes[i]; failures stay per note.
std::vector<AnnotationOutcome> AnnotateCorpus(const Corpus& notes,
                                              const Annotator& annotator,
                                              int parallelism);

}  // namespace lppa

#endif  // LPPA_ANNOTATOR_H_
