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

#ifndef LINGTYPE_TRANSLATION_HPP_
#define LINGTYPE_TRANSLATION_HPP_

#include <atomic>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "lingtype/backends.hpp"
#include "lingtype/core.hpp"

namespace lingtype {

/// The translation function g(.). Implementations must be concurrently
/// callable and satisfy translate(text, L, L) == text.
class Translator {
 public:
  virtual ~Translator() = default;
  virtual std::string translator_id() const = 0;
  virtual std::string translate(const std::string& text, Lang from,
                                Lang to) = 0;
};

/// Wrapper that enforces the identity law before dispatching.
std::string translate_text(Translator& tr, const std::string& text, Lang from,
                           Lang to);

class IdentityTranslator : public Translator {
 public:
  std::string translator_id() const override { return "identity"; }
  std::string translate(const std::string& text, Lang, Lang) override {
    return text;
  }
};

/// Word-table lookup per language pair (lang-pair<TAB>source<TAB>target
/// lines, pair spelled "en-de"). Unknown words pass through unchanged;
/// leading/trailing punctuation is preserved around mapped words. Hermetic
/// stand-in for a real MT system; counts calls for cache instrumentation.
class TableStubTranslator : public Translator {
 public:
  TableStubTranslator() = default;
  static TableStubTranslator from_file(const std::string& path);

  void add(Lang from, Lang to, const std::string& source,
           const std::string& target);
  /// Registers source->target under (from,to) and target->source under
  /// (to,from).
  void add_bidirectional(Lang from, Lang to, const std::string& source,
                         const std::string& target);

  std::string translator_id() const override { return "stub"; }
  std::string translate(const std::string& text, Lang from, Lang to) override;

  std::int64_t call_count() const { return calls_.load(); }

  /// Direct word lookup (used by scripted agents to map template tokens).
  std::optional<std::string> lookup(Lang from, Lang to,
                                    const std::string& word) const;

 private:
  std::map<std::pair<Lang, Lang>, std::unordered_map<std::string, std::string>>
      tables_;
  std::atomic<std::int64_t> calls_{0};
};

/// Uses a chat backend as g(.) with a fixed instruction, one fresh session
/// per call.
class BackendTranslator : public Translator {
 public:
  explicit BackendTranslator(std::shared_ptr<ModelBackend> backend)
      : backend_(std::move(backend)) {}
  std::string translator_id() const override;
  std::string translate(const std::string& text, Lang from, Lang to) override;

 private:
  std::shared_ptr<ModelBackend> backend_;
  std::atomic<std::uint64_t> session_counter_{0};
};

struct TranslationRecord {
  std::string source_text;
  Lang source_lang = Lang::kEn;
  Lang target_lang = Lang::kEn;
  std::string target_text;
  std::string translator_id;
  std::string content_hash;
};

std::string translation_content_hash(const std::string& translator_id,
                                     Lang from, Lang to,
                                     const std::string& source_text);

/// Content-addressed on-disk cache: one JSON file per content_hash,
/// written temp-then-rename so concurrent writers of the same key are safe
/// (last write wins with identical content).
class TranslationCache {
 public:
  explicit TranslationCache(std::string dir);
  std::optional<TranslationRecord> lookup(const std::string& content_hash,
                                          const std::string& source_text) const;
  void store(const TranslationRecord& record) const;

 private:
  std::string dir_;
};

/// Memoizes an inner translator through a TranslationCache; a second run
/// over the same inputs performs zero inner calls.
class CachingTranslator : public Translator {
 public:
  CachingTranslator(std::shared_ptr<Translator> inner, std::string cache_dir);
  std::string translator_id() const override;
  std::string translate(const std::string& text, Lang from, Lang to) override;

 private:
  std::shared_ptr<Translator> inner_;
  TranslationCache cache_;
};

/// Translates input_text and each choice (one call per choice; order and
/// labels are preserved). TE instances carry their normalized gold to the
/// target language; TV instances keep only explicitly provided golds.
TaskInstance translate_instance(const TaskInstance& instance, Lang target,
                                Translator& tr);

/// Back-translates text that currently sits in language `to` into `from`
/// (the original direction was from->to).
std::string back_translate(const std::string& text, Lang from, Lang to,
                           Translator& tr);

}  // namespace lingtype

#endif  // LINGTYPE_TRANSLATION_HPP_
