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

#include "lppa/chat.h"

#include <cstdlib>
#include <ostream>
#include <thread>

#include "httplib.h"
#include "json.hpp"
#include "lppa/errors.h"

namespace lppa {

using nlohmann::json;
using nlohmann::ordered_json;

std::string ChatRequestToJson(const ChatRequest& request) {
  ordered_json body;
  body["model"] = request.model;
  body["messages"] = ordered_json::array(
      {ordered_json{{"role", "system"}, {"content", request.system}},
       ordered_json{{"role", "user"}, {"content", request.user}}});
  body["temperature"] = request.temperature;
  body["max_tokens"] = request.max_output_tokens;
  if (request.seed) body["seed"] = *request.seed;
  return body.dump(-1, ' ', false, ordered_json::error_handler_t::replace);
}

std::string ChatReplyContent(const std::string& response_body) {
  json j = json::parse(response_body, nullptr, false);
  if (j.is_discarded()) throw TransportError("response is not JSON");
  try {
    const json& content = j.at("choices").at(0).at("message").at("content");
    if (content.is_null()) return "";
    return content.get<std::string>();
  } catch (const json::exception& e) {
    throw TransportError(std::string("unexpected response shape: ") + e.what());
  }
}

std::string ApiKeyFromEnvironment() {
  const char* key = std::getenv("LPPA_API_KEY");
  return key ? std::string(key) : std::string();
}

HttpTransport::HttpTransport(EndpointConfig config)
    : config_(std::move(config)) {
  const std::string& url = config_.base_url;
  std::size_t scheme_end = url.find("://");
  if (scheme_end == std::string::npos) {
    throw TransportError("endpoint URL needs a scheme: " + url);
  }
  std::string scheme = url.substr(0, scheme_end);
  if (scheme != "http" && scheme != "https") {
    throw TransportError("unsupported endpoint scheme: " + scheme);
  }
  std::size_t path_start = url.find('/', scheme_end + 3);
  std::string authority = url.substr(
      scheme_end + 3, path_start == std::string::npos
                          ? std::string::npos
                          : path_start - scheme_end - 3);
  if (authority.empty()) throw TransportError("endpoint URL has no host");
  host_ = authority.substr(0, authority.find(':'));
  scheme_host_port_ = scheme + "://" + authority;
  std::string base_path =
      path_start == std::string::npos ? "" : url.substr(path_start);
  while (!base_path.empty() && base_path.back() == '/') base_path.pop_back();
  path_ = base_path + "/chat/completions";
}

std::string HttpTransport::Complete(const ChatRequest& request) {
  httplib::Client client(scheme_host_port_);
  if (!client.is_valid()) {
    throw TransportError("cannot create client for " + scheme_host_port_);
  }
  client.set_connection_timeout(config_.timeout);
  client.set_read_timeout(config_.timeout);
  client.set_write_timeout(config_.timeout);
  httplib::Headers headers;
  if (!config_.api_key.empty()) {
    headers.emplace("Authorization", "Bearer " + config_.api_key);
    headers.emplace("api-key", config_.api_key);
  }
  ChatRequest req = request;
  if (req.model.empty()) req.model = config_.model;
  auto result = client.Post(path_, headers, ChatRequestToJson(req),
                            "application/json");
  if (!result) {
    throw TransportError("request to " + host_ + " failed: " +
                         httplib::to_string(result.error()));
  }
  if (result->status < 200 || result->status >= 300) {
    throw TransportError(
        "endpoint " + host_ + " returned HTTP " + std::to_string(result->status),
        result->status);
  }
  return ChatReplyContent(result->body);
}

ScriptedTransport::ScriptedTransport(std::vector<std::string> replies,
                                     bool cycle)
    : replies_(std::move(replies)), cycle_(cycle) {}

std::string ScriptedTransport::Complete(const ChatRequest& request) {
  int now = ++in_flight_;
  int seen = max_in_flight_.load();
  while (now > seen && !max_in_flight_.compare_exchange_weak(seen, now)) {
  }
  std::string reply;
  bool exhausted = false;
  {
    std::lock_guard<std::mutex> lock(mu_);
    requests_.push_back(request);
    if (next_ < replies_.size()) {
      reply = replies_[next_];
      next_ = cycle_ ? (next_ + 1) % replies_.size() : next_ + 1;
    } else {
      exhausted = true;
    }
  }
  if (delay_.count() > 0) std::this_thread::sleep_for(delay_);
  --in_flight_;
  if (exhausted) throw TransportError("scripted transport has no more replies");
  if (reply.rfind("!error", 0) == 0) {
    throw TransportError("scripted failure: " + reply.substr(6));
  }
  return reply;
}

std::vector<ChatRequest> ScriptedTransport::requests() const {
  std::lock_guard<std::mutex> lock(mu_);
  return requests_;
}

AuditingTransport::AuditingTransport(std::shared_ptr<ChatTransport> inner,
                                     std::ostream* log)
    : inner_(std::move(inner)), log_(log) {}

std::string AuditingTransport::Complete(const ChatRequest& request) {
  const std::size_t sent = request.system.size() + request.user.size();
  std::string reply;
  std::string status = "ok";
  try {
    reply = inner_->Complete(request);
  } catch (const TransportError& e) {
    status = "error";
    if (log_) {
      std::lock_guard<std::mutex> lock(mu_);
      *log_ << "audit call=" << ++calls_ << " host=" << inner_->destination()
            << " sent_bytes=" << sent << " received_bytes=0 status=" << status
            << '\n';
    }
    throw;
  }
  if (log_) {
    std::lock_guard<std::mutex> lock(mu_);
    *log_ << "audit call=" << ++calls_ << " host=" << inner_->destination()
          << " sent_bytes=" << sent << " received_bytes=" << reply.size()
          << " status=" << status << '\n';
  }
  return reply;
}

}  // namespace lppa
