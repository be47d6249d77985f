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

#ifndef LPPA_CHAT_H_
#define LPPA_CHAT_H_

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace lppa {

// One chat-completion call: a system turn followed by a user turn.
struct ChatRequest {
  std::string system;
  std::string user;
  std::string model;
  double temperature = 0.0;
  int max_output_tokens = 2048;
  // Forwarded as the endpoint's "seed" parameter when set.
  std::optional<std::uint64_t> seed;

  friend bool operator==(const ChatRequest&, const ChatRequest&) = default;
};

// Request body in the OpenAI-compatible chat-completion shape.
std::string ChatRequestToJson(const ChatRequest& request);
// Extracts choices[0].message.content. Throws TransportError when the body
// does not have that shape.
std::string ChatReplyContent(const std::string& response_body);

// Sends one request and returns the assistant text. Implementations must be
// safe to call from several threads at once. Failures throw TransportError.
class ChatTransport {
 public:
  virtual ~ChatTransport() = default;
  virtual std::string Complete(const ChatRequest& request) = 0;
  // Host the transport talks to, for audit lines.
  virtual std::string destination() const = 0;
};

struct EndpointConfig {
  // e.g. "http://localhost:8000/v1"; "/chat/completions" is appended.
  std::string base_url;
  std::string model;
  std::string api_key;
  std::chrono::seconds timeout{120};
};

// Reads the API key from LPPA_API_KEY; empty when unset.
std::string ApiKeyFromEnvironment();

// HTTP(S) client for a single configured endpoint.
class HttpTransport : public ChatTransport {
 public:
  explicit HttpTransport(EndpointConfig config);
  std::string Complete(const ChatRequest& request) override;
  std::string destination() const override { return host_; }

 private:
  EndpointConfig config_;
  std::string scheme_host_port_;
  std::string host_;
  std::string path_;
};

// Replays canned replies in call order. A reply starting with "!error"
// raises TransportError instead. Records every request it receives.
class ScriptedTransport : public ChatTransport {
 public:
  explicit ScriptedTransport(std::vector<std::string> replies,
                             bool cycle = false);
  std::string Complete(const ChatRequest& request) override;
  std::string destination() const override { return "scripted"; }

  std::vector<ChatRequest> requests() const;
  int max_in_flight() const { return max_in_flight_.load(); }
  // Optional hook run inside Complete while the call counts as in flight.
  void set_delay(std::chrono::microseconds delay) { delay_ = delay; }

 private:
  std::vector<std::string> replies_;
  bool cycle_;
  mutable std::mutex mu_;
  std::size_t next_ = 0;
  std::vector<ChatRequest> requests_;
  std::atomic<int> in_flight_{0};
  std::atomic<int> max_in_flight_{0};
  std::chrono::microseconds delay_{0};
};

// Wraps a transport and writes one line per call with the destination host
// and byte counts. Never logs message content.
class AuditingTransport : public ChatTransport {
 public:
  AuditingTransport(std::shared_ptr<ChatTransport> inner, std::ostream* log);
  std::string Complete(const ChatRequest& request) override;
  std::string destination() const override { return inner_->destination(); }

 private:
  std::shared_ptr<ChatTransport> inner_;
  std::ostream* log_;
  std::mutex mu_;
  std::uint64_t calls_ = 0;
};

}  // namespace lppa

#endif  // LPPA_CHAT_H_
