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

#ifndef LINGTYPE_BACKENDS_HPP_
#define LINGTYPE_BACKENDS_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lingtype/core.hpp"

namespace lingtype {

struct ChatTurn {
  std::string role;  // "user" | "assistant"
  std::string content;
};

/// Binds one multi-turn exchange. Turns are ordered; a session is never
/// shared across trials.
class SessionHandle {
 public:
  explicit SessionHandle(std::string id) : id_(std::move(id)) {}

  const std::string& id() const { return id_; }
  const std::vector<ChatTurn>& turns() const { return turns_; }
  void append(std::string role, std::string content) {
    turns_.push_back({std::move(role), std::move(content)});
  }
  int user_turns() const {
    int n = 0;
    for (const ChatTurn& t : turns_) n += (t.role == "user") ? 1 : 0;
    return n;
  }

 private:
  std::string id_;
  std::vector<ChatTurn> turns_;
};

struct BackendCaps {
  std::size_t max_prompt_chars = 1 << 20;
  bool supports_temperature = false;
};

struct BackendReply {
  std::string text;
  int retries = 0;
};

/// Chat-model access contract. Implementations must be callable from
/// multiple concurrent workers; no state carries across calls except what
/// travels in the SessionHandle.
class ModelBackend {
 public:
  virtual ~ModelBackend() = default;
  virtual std::string model_id() const = 0;
  virtual BackendCaps capabilities() const = 0;
  /// The session already ends with the new user turn; returns this turn's
  /// assistant text.
  virtual BackendReply complete(const SessionHandle& session) = 0;
};

/// One model response in one session.
struct Trial {
  int trial_index = 0;
  std::string session_id;
  std::string prompt_text;
  std::string response_text;
  ExtractionResult extracted;    // filled in by the scoring pass
  std::string explanation_text;  // second-turn reply, empty when unprobed
  double temperature = -1.0;     // -1 = backend default
  std::optional<std::uint64_t> seed;
  int retries = 0;
  std::string error;  // transport/backend failure; empty means success
  std::int64_t timestamp_ms = 0;

  bool failed() const { return !error.empty(); }
};

/// Sends one prompt inside a session: appends the user turn, calls the
/// backend, appends the assistant turn. Prompts longer than the backend's
/// limit are rejected before any call (PromptTooLong).
BackendReply query(ModelBackend& backend, SessionHandle& session,
                   const std::string& prompt);

/// Runs n independent trials of `prompt`, each in a fresh session (ids
/// "<session_prefix>#<i>"). When followup is present, asks it as a second
/// turn of the same session and records the reply as explanation_text.
/// Per-trial failures are retained in the Trial record, never dropped.
/// Result order equals trial_index order regardless of completion order.
std::vector<Trial> run_trials(ModelBackend& backend, const std::string& prompt,
                              int n, const std::optional<std::string>& followup,
                              const std::string& session_prefix,
                              int max_workers = 1);

/// Runs fn(0..n-1) on up to max_workers threads. Exceptions propagate.
void parallel_for(std::size_t n, int max_workers,
                  const std::function<void(std::size_t)>& fn);

}  // namespace lingtype

#endif  // LINGTYPE_BACKENDS_HPP_
