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

#include "lppa/annotator.h"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "lppa/prompts.h"

namespace lppa {

std::chrono::milliseconds RetryPolicy::BackoffBefore(int attempt) const {
  if (attempt <= 1) return std::chrono::milliseconds(0);
  int shift = std::min(attempt - 2, 20);
  return backoff_base * (1LL << shift);
}

Sleeper RealSleeper() {
  return [](std::chrono::milliseconds d) { std::this_thread::sleep_for(d); };
}

ChatRequest BuildTaskPrompt(std::string_view note_text, std::string_view model) {
  if (note_text.empty()) {
    throw std::invalid_argument("cannot build a task prompt for an empty note");
  }
  ChatRequest req;
  req.system = std::string(prompts::kTaskSystem);
  req.user.reserve(prompts::kTaskUserPrefix.size() + note_text.size());
  req.user.append(prompts::kTaskUserPrefix);
  req.user.append(note_text);
  req.model = std::string(model);
  req.temperature = 0.0;
  return req;
}

Annotator::Annotator(ChatTransport& transport, RetryPolicy retry,
                     std::string model, Sleeper sleep)
    : transport_(transport),
      retry_(retry),
      model_(std::move(model)),
      sleep_(std::move(sleep)) {}

Annotation Annotator::Annotate(const NoteRecord& note) const {
  ChatRequest request = BuildTaskPrompt(note.text, model_);
  int attempts = 0;
  Annotation result = CompleteWithRetry(
      transport_, request, retry_, sleep_, [&](const std::string& reply) {
        ++attempts;
        PhiParseResult parsed = ParsePhiDictionary(reply, /*strict=*/false);
        return Annotation{std::move(parsed.dictionary),
                          std::move(parsed.warnings), 0};
      });
  result.attempts = attempts;
  return result;
}

std::vector<AnnotationOutcome> AnnotateCorpus(const Corpus& notes,
                                              const Annotator& annotator,
                                              int parallelism) {
  std::vector<AnnotationOutcome> results(notes.size());
  ParallelFor(notes.size(), parallelism, [&](std::size_t i) {
    AnnotationOutcome& out = results[i];
    out.id = notes[i].id;
    try {
      out.annotation = annotator.Annotate(notes[i]);
    } catch (const std::exception& e) {
      out.error = e.what();
    }
  });
  return results;
}

}  // namespace lppa
