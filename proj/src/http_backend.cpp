// Copyright 2026 The lingtype Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lingtype/http_backend.hpp"

#include <chrono>
#include <cstdlib>
#include <mutex>
#include <condition_variable>
#include <thread>

#include "httplib.h"
#include <nlohmann/json.hpp>

#include "lingtype/errors.hpp"

namespace lingtype {

using nlohmann::json;

namespace {

/// Counting semaphore capping in-flight requests per backend.
class RequestGate {
 public:
  explicit RequestGate(int limit) : slots_(limit < 1 ? 1 : limit) {}
  void acquire() {
    std::unique_lock<std::mutex> lock(mutex_);
    cv_.wait(lock, [&] { return slots_ > 0; });
    --slots_;
  }
  void release() {
    {
      std::lock_guard<std::mutex> lock(mutex_);
      ++slots_;
    }
    cv_.notify_one();
  }

 private:
  std::mutex mutex_;
  std::condition_variable cv_;
  int slots_;
};

struct GateGuard {
  explicit GateGuard(RequestGate& g) : gate(g) { gate.acquire(); }
  ~GateGuard() { gate.release(); }
  RequestGate& gate;
};

}  // namespace

struct HttpChatBackend::Impl {
  HttpBackendConfig config;
  std::string api_key;
  RequestGate gate;

  explicit Impl(HttpBackendConfig cfg)
      : config(std::move(cfg)), gate(config.max_concurrency) {
    if (!config.api_key_env.empty()) {
      if (const char* v = std::getenv(config.api_key_env.c_str())) api_key = v;
    }
  }
};

HttpChatBackend::HttpChatBackend(HttpBackendConfig config)
    : impl_(std::make_unique<Impl>(std::move(config))) {
  if (impl_->config.base_url.empty()) {
    throw ConfigError("http backend requires base_url");
  }
}

HttpChatBackend::~HttpChatBackend() = default;

std::string HttpChatBackend::model_id() const { return impl_->config.model_id; }

BackendCaps HttpChatBackend::capabilities() const {
  return BackendCaps{1 << 20, true};
}

BackendReply HttpChatBackend::complete(const SessionHandle& session) {
  const HttpBackendConfig& cfg = impl_->config;

  json body;
  body["model"] = cfg.model_id;
  json messages = json::array();
  for (const ChatTurn& turn : session.turns()) {
    messages.push_back({{"role", turn.role}, {"content", turn.content}});
  }
  body["messages"] = messages;
  if (cfg.temperature >= 0) body["temperature"] = cfg.temperature;
  const std::string payload = body.dump();

  httplib::Headers headers;
  if (!impl_->api_key.empty()) {
    headers.emplace("Authorization", "Bearer " + impl_->api_key);
  }

  std::string last_failure;
  for (int attempt = 0; attempt <= cfg.retry_max; ++attempt) {
    if (attempt > 0) {
      // 429 with Retry-After overrides the exponential schedule below.
      int delay_ms = cfg.backoff_base_ms << std::min(attempt - 1, 5);
      delay_ms = std::min(delay_ms, 8000);
      std::this_thread::sleep_for(std::chrono::milliseconds(delay_ms));
    }
    httplib::Result res;
    {
      GateGuard guard(impl_->gate);
      httplib::Client client(cfg.base_url);
      client.set_connection_timeout(cfg.timeout_s, 0);
      client.set_read_timeout(cfg.timeout_s, 0);
      res = client.Post(cfg.path, headers, payload, "application/json");
    }
    if (!res) {
      last_failure = "connection error: " + httplib::to_string(res.error());
      continue;
    }
    if (res->status == 429) {
      last_failure = "rate limited (429)";
      if (auto it = res->headers.find("Retry-After");
          it != res->headers.end()) {
        int wait_s = std::atoi(it->second.c_str());
        if (wait_s > 0 && attempt < cfg.retry_max) {
          std::this_thread::sleep_for(std::chrono::seconds(wait_s));
        }
      }
      continue;
    }
    if (res->status >= 500) {
      last_failure = "server error (" + std::to_string(res->status) + ")";
      continue;
    }
    if (res->status != 200) {
      throw BackendRefusal("backend refused request (" +
                           std::to_string(res->status) + "): " + res->body);
    }
    json reply = json::parse(res->body, nullptr, false);
    if (reply.is_discarded() || !reply.contains("choices") ||
        reply["choices"].empty()) {
      throw TransportError("unparseable completion response: " + res->body);
    }
    const json& msg = reply["choices"][0];
    std::string text;
    if (msg.contains("message") && msg["message"].contains("content")) {
      text = msg["message"]["content"].get<std::string>();
    } else if (msg.contains("text")) {
      text = msg["text"].get<std::string>();
    } else {
      throw TransportError("completion response lacks message content");
    }
    return BackendReply{std::move(text), attempt};
  }
  if (last_failure.find("rate limited") != std::string::npos) {
    throw RateLimited("gave up after " + std::to_string(cfg.retry_max) +
                      " retries: " + last_failure);
  }
  throw TransportError("gave up after " + std::to_string(cfg.retry_max) +
                       " retries: " + last_failure);
}

}  // namespace lingtype
