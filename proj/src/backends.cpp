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

#include "lingtype/backends.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <thread>

#include "lingtype/errors.hpp"

namespace lingtype {

BackendReply query(ModelBackend& backend, SessionHandle& session,
                   const std::string& prompt) {
  if (prompt.size() > backend.capabilities().max_prompt_chars) {
    throw PromptTooLong("prompt of " + std::to_string(prompt.size()) +
                        " chars exceeds backend limit of " +
                        std::to_string(backend.capabilities().max_prompt_chars));
  }
  session.append("user", prompt);
  BackendReply reply = backend.complete(session);
  session.append("assistant", reply.text);
  return reply;
}

void parallel_for(std::size_t n, int max_workers,
                  const std::function<void(std::size_t)>& fn) {
  if (n == 0) return;
  const std::size_t workers =
      std::min<std::size_t>(n, static_cast<std::size_t>(
                                   max_workers < 1 ? 1 : max_workers));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr first_error;
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&] {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= n) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
        }
      }
    });
  }
  for (std::thread& t : threads) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

std::vector<Trial> run_trials(ModelBackend& backend, const std::string& prompt,
                              int n,
                              const std::optional<std::string>& followup,
                              const std::string& session_prefix,
                              int max_workers) {
  if (n < 1) throw OutOfRange("run_trials: n must be >= 1");
  std::vector<Trial> trials(static_cast<std::size_t>(n));
  parallel_for(static_cast<std::size_t>(n), max_workers, [&](std::size_t i) {
    Trial& trial = trials[i];
    trial.trial_index = static_cast<int>(i);
    trial.session_id = session_prefix + "#" + std::to_string(i);
    trial.prompt_text = prompt;
    trial.timestamp_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::system_clock::now().time_since_epoch())
            .count();
    SessionHandle session(trial.session_id);
    try {
      BackendReply reply = query(backend, session, prompt);
      trial.response_text = reply.text;
      trial.retries = reply.retries;
      if (followup.has_value()) {
        BackendReply explain = query(backend, session, *followup);
        trial.explanation_text = explain.text;
        trial.retries += explain.retries;
      }
    } catch (const Error& e) {
      trial.error = e.what();
    }
  });
  return trials;
}

}  // namespace lingtype
