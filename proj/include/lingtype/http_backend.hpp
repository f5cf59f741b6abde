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

#ifndef LINGTYPE_HTTP_BACKEND_HPP_
#define LINGTYPE_HTTP_BACKEND_HPP_

#include <memory>
#include <string>

#include "lingtype/backends.hpp"

namespace lingtype {

struct HttpBackendConfig {
  std::string base_url;       // e.g. "http://localhost:8080"
  std::string path = "/v1/chat/completions";
  std::string model_id;
  std::string api_key_env;    // env var holding the bearer token; may be empty
  int max_concurrency = 4;
  int timeout_s = 30;
  int retry_max = 5;          // attempts beyond the first
  int backoff_base_ms = 250;  // doubled per retry, capped at 8s
  double temperature = -1.0;  // < 0: let the backend default apply
};

/// Chat-completion client for an OpenAI-compatible endpoint.
/// POSTs {model, messages:[{role, content}...], temperature}; the reply is
/// the first choice's message content. 429 honors Retry-After; 5xx and
/// connection failures retry with bounded exponential backoff; other 4xx
/// are a BackendRefusal and never retried.
class HttpChatBackend : public ModelBackend {
 public:
  explicit HttpChatBackend(HttpBackendConfig config);
  ~HttpChatBackend() override;

  std::string model_id() const override;
  BackendCaps capabilities() const override;
  BackendReply complete(const SessionHandle& session) override;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace lingtype

#endif  // LINGTYPE_HTTP_BACKEND_HPP_
