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

#ifndef LINGTYPE_CORE_HPP_
#define LINGTYPE_CORE_HPP_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lingtype/language.hpp"

namespace lingtype {

enum class Category { kReasoning, kKnowledgeAccess, kArticulating };
enum class Translatability { kTE, kTV };
enum class AnswerKind { kChoiceLabel, kInteger, kBoolean, kFreeText };

std::string_view to_string(Category c);
std::string_view to_string(Translatability t);
std::string_view to_string(AnswerKind k);
Category parse_category(std::string_view s);
Translatability parse_translatability(std::string_view s);
AnswerKind parse_answer_kind(std::string_view s);

/// Static description of one task family.
struct TaskDescriptor {
  std::string task_id;
  Category category = Category::kReasoning;
  Translatability translatability = Translatability::kTE;
  AnswerKind answer_kind = AnswerKind::kChoiceLabel;

  /// Throws SchemaError; free-text answers are only valid for Articulating.
  void validate() const;

  bool operator==(const TaskDescriptor&) const = default;
};

/// A normalized answer value, comparable across languages and phrasings.
/// Normalization is idempotent; values never contain '<', so the reserved
/// INVALID marker cannot collide with a real answer.
struct CanonicalAnswer {
  AnswerKind kind = AnswerKind::kFreeText;
  std::string value;

  bool operator==(const CanonicalAnswer&) const = default;
  bool operator<(const CanonicalAnswer& o) const { return value < o.value; }

  static constexpr std::string_view kInvalidValue = "<invalid>";
  static CanonicalAnswer invalid(AnswerKind k) {
    return {k, std::string(kInvalidValue)};
  }
  bool is_invalid() const { return value == kInvalidValue; }
};

/// One evaluable item, possibly carrying per-language gold answers.
struct TaskInstance {
  std::string instance_id;
  TaskDescriptor task;
  Lang source_language = Lang::kEn;
  std::string input_text;
  std::vector<std::string> choices;  // empty unless choice-label
  std::map<Lang, CanonicalAnswer> gold_by_language;
  std::map<std::string, std::string> metadata;

  /// Structural invariants: 5 choices and label golds for choice tasks,
  /// integer golds parse, TE golds form a single equivalence class.
  void validate() const;

  std::optional<CanonicalAnswer> gold(Lang lang) const;
};

inline constexpr std::array<std::string_view, 5> kChoiceLabels = {"A", "B",
                                                                  "C", "D",
                                                                  "E"};

// ---------------------------------------------------------------------------
// Answer extraction

enum class ExtractError { kNoAnswerFound, kAmbiguousAnswer };
std::string_view to_string(ExtractError e);

/// Outcome of normalize_answer: an answer or a typed extraction error,
/// never an exception.
struct ExtractionResult {
  std::optional<CanonicalAnswer> answer;
  std::optional<ExtractError> error;

  bool ok() const { return answer.has_value(); }
  static ExtractionResult of(CanonicalAnswer a) { return {std::move(a), {}}; }
  static ExtractionResult fail(ExtractError e) { return {{}, e}; }
};

/// Multilingual yes/no surface forms, shippable as a data file
/// (one record per line: lang<TAB>polarity<TAB>surface).
class CueTable {
 public:
  struct Entry {
    Lang lang;
    bool positive;
    std::string surface;  // stored case-folded
  };

  static const CueTable& builtin();
  static CueTable from_file(const std::string& path);

  /// Earliest match position wins; at equal positions the longest surface
  /// wins (so zh "不是" beats the embedded "是"). Latin surfaces require word
  /// boundaries; CJK surfaces match as substrings.
  std::optional<bool> match(std::string_view folded_text) const;

  /// First surface registered for (lang, polarity); used to synthesize
  /// scripted-agent replies.
  std::string surface(Lang lang, bool positive) const;

  const std::vector<Entry>& entries() const { return entries_; }
  void add(Lang lang, bool positive, std::string surface);

 private:
  std::vector<Entry> entries_;
};

/// Extracts and normalizes a model answer.
///   choice-label: explicit label pattern > exact choice text > fuzzy
///                 containment; result is the label A-E.
///   integer:      last integer token of the last line containing one,
///                 thousands separators stripped.
///   boolean:      multilingual cue table lookup -> "yes"/"no".
///   free-text:    case-folded, whitespace-collapsed text.
/// Total: returns a typed error instead of throwing. Deterministic.
ExtractionResult normalize_answer(std::string_view raw, AnswerKind kind,
                                  const std::vector<std::string>& choices = {},
                                  const CueTable& cues = CueTable::builtin());

}  // namespace lingtype

#endif  // LINGTYPE_CORE_HPP_
