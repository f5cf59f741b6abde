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

#include "lingtype/core.hpp"

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <cstdlib>
#include <set>
#include <sstream>

#include "lingtype/errors.hpp"
#include "lingtype/text_util.hpp"

namespace lingtype {

std::string_view to_string(Category c) {
  switch (c) {
    case Category::kReasoning: return "Reasoning";
    case Category::kKnowledgeAccess: return "KnowledgeAccess";
    case Category::kArticulating: return "Articulating";
  }
  return "?";
}

std::string_view to_string(Translatability t) {
  return t == Translatability::kTE ? "TE" : "TV";
}

std::string_view to_string(AnswerKind k) {
  switch (k) {
    case AnswerKind::kChoiceLabel: return "choice-label";
    case AnswerKind::kInteger: return "integer";
    case AnswerKind::kBoolean: return "boolean";
    case AnswerKind::kFreeText: return "free-text";
  }
  return "?";
}

std::string_view to_string(ExtractError e) {
  return e == ExtractError::kNoAnswerFound ? "NoAnswerFound"
                                           : "AmbiguousAnswer";
}

Category parse_category(std::string_view s) {
  if (s == "Reasoning") return Category::kReasoning;
  if (s == "KnowledgeAccess") return Category::kKnowledgeAccess;
  if (s == "Articulating") return Category::kArticulating;
  throw SchemaError("unknown category: " + std::string(s));
}

Translatability parse_translatability(std::string_view s) {
  if (s == "TE") return Translatability::kTE;
  if (s == "TV") return Translatability::kTV;
  throw SchemaError("unknown translatability: " + std::string(s));
}

AnswerKind parse_answer_kind(std::string_view s) {
  if (s == "choice-label") return AnswerKind::kChoiceLabel;
  if (s == "integer") return AnswerKind::kInteger;
  if (s == "boolean") return AnswerKind::kBoolean;
  if (s == "free-text") return AnswerKind::kFreeText;
  throw SchemaError("unknown answer_kind: " + std::string(s));
}

void TaskDescriptor::validate() const {
  if (task_id.empty()) throw SchemaError("task_id must be nonempty");
  if (answer_kind == AnswerKind::kFreeText &&
      category != Category::kArticulating) {
    throw SchemaError("task '" + task_id +
                      "': free-text answers require the Articulating category");
  }
}

std::optional<CanonicalAnswer> TaskInstance::gold(Lang lang) const {
  auto it = gold_by_language.find(lang);
  if (it == gold_by_language.end()) return std::nullopt;
  return it->second;
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

void TaskInstance::validate() const {
  task.validate();
  if (instance_id.empty()) throw SchemaError("instance_id must be nonempty");
  if (task.answer_kind == AnswerKind::kChoiceLabel && choices.size() != 5) {
    throw SchemaError("instance '" + instance_id + "': expected 5 choices, got " +
                      std::to_string(choices.size()));
  }
  for (const auto& [lang, g] : gold_by_language) {
    if (g.kind != task.answer_kind) {
      throw SchemaError("instance '" + instance_id +
                        "': gold kind does not match task answer_kind");
    }
    switch (task.answer_kind) {
      case AnswerKind::kChoiceLabel:
        if (std::find(kChoiceLabels.begin(), kChoiceLabels.end(), g.value) ==
            kChoiceLabels.end()) {
          throw SchemaError("instance '" + instance_id + "': gold label '" +
                            g.value + "' outside A-E");
        }
        break;
      case AnswerKind::kInteger:
        if (!is_integer_literal(g.value)) {
          throw SchemaError("instance '" + instance_id + "': gold '" + g.value +
                            "' is not an integer");
        }
        break;
      case AnswerKind::kBoolean:
        if (g.value != "yes" && g.value != "no") {
          throw SchemaError("instance '" + instance_id + "': boolean gold '" +
                            g.value + "' must be yes or no");
        }
        break;
      case AnswerKind::kFreeText:
        break;
    }
  }
  if (task.translatability == Translatability::kTE &&
      gold_by_language.size() > 1) {
    // TE golds must form a single equivalence class under normalization.
    std::set<std::string> values;
    for (const auto& [lang, g] : gold_by_language) {
      ExtractionResult r = normalize_answer(g.value, task.answer_kind, choices);
      values.insert(r.ok() ? r.answer->value : g.value);
    }
    if (values.size() > 1) {
      throw SchemaError("instance '" + instance_id +
                        "': TE gold answers differ across languages");
    }
  }
}

// ---------------------------------------------------------------------------
// Cue table

const CueTable& CueTable::builtin() {
  static const CueTable table = [] {
    CueTable t;
    t.add(Lang::kEn, true, "yes");
    t.add(Lang::kEn, true, "yeah");
    t.add(Lang::kEn, true, "yep");
    t.add(Lang::kEn, false, "no");
    t.add(Lang::kEn, false, "nope");
    t.add(Lang::kDe, true, "ja");
    t.add(Lang::kDe, false, "nein");
    t.add(Lang::kFr, true, "oui");
    t.add(Lang::kFr, false, "non");
    t.add(Lang::kEs, true, "sí");
    t.add(Lang::kEs, false, "no");
    t.add(Lang::kZh, true, "是的");
    t.add(Lang::kZh, true, "是");
    t.add(Lang::kZh, false, "不是");
    t.add(Lang::kZh, false, "没有");
    t.add(Lang::kZh, false, "不");
    t.add(Lang::kJa, true, "はい");
    t.add(Lang::kJa, true, "ええ");
    t.add(Lang::kJa, false, "いいえ");
    return t;
  }();
  return table;
}

void CueTable::add(Lang lang, bool positive, std::string surface) {
  entries_.push_back(Entry{lang, positive, fold_case(surface)});
}

CueTable CueTable::from_file(const std::string& path) {
  CueTable t;
  std::istringstream in(read_file(path));
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty() || line[0] == '#') continue;
    std::vector<std::string> fields = split(line, '\t');
    if (fields.size() != 3) {
      throw ParseError("cue table " + path + ":" + std::to_string(line_no) +
                       ": expected lang<TAB>polarity<TAB>surface");
    }
    Lang lang = parse_lang(trim(fields[0]));
    const std::string polarity = trim(fields[1]);
    if (polarity != "yes" && polarity != "no") {
      throw ParseError("cue table " + path + ":" + std::to_string(line_no) +
                       ": polarity must be yes or no");
    }
    t.add(lang, polarity == "yes", trim(fields[2]));
  }
  return t;
}

namespace {

bool ascii_alnum(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0;
}

bool latin_boundary_ok(std::string_view text, std::size_t pos,
                       std::size_t len) {
  if (pos > 0 && ascii_alnum(text[pos - 1])) return false;
  if (pos + len < text.size() && ascii_alnum(text[pos + len])) return false;
  return true;
}

}  // namespace

std::optional<bool> CueTable::match(std::string_view folded_text) const {
  std::size_t best_pos = std::string_view::npos;
  std::size_t best_len = 0;
  bool best_polarity = false;
  for (const Entry& e : entries_) {
    std::size_t from = 0;
    while (true) {
      std::size_t pos = folded_text.find(e.surface, from);
      if (pos == std::string_view::npos) break;
      std::size_t cp_pos = 0;
      const bool cjk = is_cjk_char(decode_utf8(e.surface, cp_pos));
      if (cjk || latin_boundary_ok(folded_text, pos, e.surface.size())) {
        if (pos < best_pos ||
            (pos == best_pos && e.surface.size() > best_len)) {
          best_pos = pos;
          best_len = e.surface.size();
          best_polarity = e.positive;
        }
        break;
      }
      from = pos + 1;
    }
  }
  if (best_pos == std::string_view::npos) return std::nullopt;
  return best_polarity;
}

std::string CueTable::surface(Lang lang, bool positive) const {
  for (const Entry& e : entries_) {
    if (e.lang == lang && e.positive == positive) return e.surface;
  }
  throw UnknownLanguage("no cue surface for " + std::string(lang_code(lang)));
}

// ---------------------------------------------------------------------------
// Answer extraction

namespace {

bool label_left_boundary(std::string_view t, std::size_t i) {
  if (i == 0) return true;
  char p = t[i - 1];
  return p == ' ' || p == '\t' || p == '\n' || p == '(' || p == '[' ||
         p == '"' || p == '\'' || p == ':' || p == '*';
}

bool label_right_boundary(std::string_view t, std::size_t i) {
  if (i + 1 >= t.size()) return true;
  char n = t[i + 1];
  return n == '.' || n == ')' || n == ':' || n == ',' || n == ';' ||
         n == ']' || n == '"' || n == '\'' || n == '\n' || n == '*';
}

/// Scans folded text for explicit label mentions: "(c)" or a standalone
/// letter with a terminator ("c.", "c)", line-final "c"). Returns distinct
/// labels in first-seen order.
std::vector<char> scan_labels(std::string_view folded, std::size_t from,
                              std::size_t to) {
  std::vector<char> found;
  auto record = [&](char c) {
    char label = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (std::find(found.begin(), found.end(), label) == found.end()) {
      found.push_back(label);
    }
  };
  for (std::size_t i = from; i < to && i < folded.size(); ++i) {
    char c = folded[i];
    if (c < 'a' || c > 'e') continue;
    if (i > 0 && folded[i - 1] == '(' && i + 1 < folded.size() &&
        folded[i + 1] == ')') {
      record(c);
      continue;
    }
    if (label_left_boundary(folded, i) && label_right_boundary(folded, i)) {
      // A bare trailing letter counts; a letter followed by more prose does
      // not (otherwise the article "a" would match).
      if (i + 1 >= folded.size() || folded[i + 1] != ' ') record(c);
    }
  }
  return found;
}

const std::vector<std::string>& answer_cues() {
  static const std::vector<std::string> cues = {
      "answer", "antwort", "réponse", "respuesta", "答案", "答え"};
  return cues;
}

ExtractionResult extract_choice(std::string_view raw,
                                const std::vector<std::string>& choices) {
  const std::string folded = fold_case(raw);

  // Tier 1: the label nearest after an answer cue word. Each cue occurrence
  // contributes at most one label, so trailing rationale ("... not (A)")
  // cannot make the extraction ambiguous.
  std::vector<char> cue_hits;
  for (const std::string& cue : answer_cues()) {
    std::size_t pos = 0;
    while ((pos = folded.find(cue, pos)) != std::string::npos) {
      std::vector<char> here =
          scan_labels(folded, pos + cue.size(), pos + cue.size() + 24);
      if (!here.empty() && std::find(cue_hits.begin(), cue_hits.end(),
                                     here[0]) == cue_hits.end()) {
        cue_hits.push_back(here[0]);
      }
      pos += cue.size();
    }
  }
  if (cue_hits.size() == 1) {
    return ExtractionResult::of(
        {AnswerKind::kChoiceLabel, std::string(1, cue_hits[0])});
  }
  if (cue_hits.size() > 1) {
    return ExtractionResult::fail(ExtractError::kAmbiguousAnswer);
  }

  // Tier 2: explicit label pattern anywhere.
  std::vector<char> labels = scan_labels(folded, 0, folded.size());
  if (labels.size() == 1) {
    return ExtractionResult::of(
        {AnswerKind::kChoiceLabel, std::string(1, labels[0])});
  }
  if (labels.size() > 1) {
    return ExtractionResult::fail(ExtractError::kAmbiguousAnswer);
  }

  // Tier 3: whole response equals a choice text.
  const std::string folded_ws = collapse_whitespace(folded);
  for (std::size_t i = 0; i < choices.size() && i < kChoiceLabels.size(); ++i) {
    if (folded_ws == collapse_whitespace(fold_case(choices[i]))) {
      return ExtractionResult::of(
          {AnswerKind::kChoiceLabel, std::string(kChoiceLabels[i])});
    }
  }

  // Tier 4: fuzzy containment; the longest matched choice text wins.
  std::size_t best_i = choices.size();
  std::size_t best_len = 0;
  bool tie = false;
  for (std::size_t i = 0; i < choices.size() && i < kChoiceLabels.size(); ++i) {
    const std::string c = collapse_whitespace(fold_case(choices[i]));
    if (c.empty() || folded_ws.find(c) == std::string::npos) continue;
    if (c.size() > best_len) {
      best_len = c.size();
      best_i = i;
      tie = false;
    } else if (c.size() == best_len && i != best_i) {
      tie = true;
    }
  }
  if (best_i < choices.size()) {
    if (tie) return ExtractionResult::fail(ExtractError::kAmbiguousAnswer);
    return ExtractionResult::of(
        {AnswerKind::kChoiceLabel, std::string(kChoiceLabels[best_i])});
  }
  return ExtractionResult::fail(ExtractError::kNoAnswerFound);
}

/// Integer tokens of one line, thousands separators merged, decimal
/// fractions skipped.
std::vector<std::string> integer_tokens(std::string_view line) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (!std::isdigit(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    bool negative = false;
    if (start > 0 && line[start - 1] == '-' &&
        (start == 1 || !ascii_alnum(line[start - 2]))) {
      negative = true;
    }
    // Fractional part of a decimal: digits preceded by "<digit>."
    const bool fraction = start >= 2 && line[start - 1] == '.' &&
                          std::isdigit(static_cast<unsigned char>(line[start - 2]));
    std::string digits;
    while (i < line.size()) {
      if (std::isdigit(static_cast<unsigned char>(line[i]))) {
        digits.push_back(line[i]);
        ++i;
      } else if (line[i] == ',' && i + 3 < line.size() + 1 &&
                 i + 3 <= line.size() &&
                 std::isdigit(static_cast<unsigned char>(line[i + 1])) &&
                 std::isdigit(static_cast<unsigned char>(line[i + 2])) &&
                 std::isdigit(static_cast<unsigned char>(line[i + 3])) &&
                 (i + 4 >= line.size() ||
                  !std::isdigit(static_cast<unsigned char>(line[i + 4])))) {
        i += 1;  // thousands separator
      } else {
        break;
      }
    }
    // Integer part of a decimal ("3.6") is not an integer answer.
    const bool has_fraction_tail =
        i + 1 < line.size() && line[i] == '.' &&
        std::isdigit(static_cast<unsigned char>(line[i + 1]));
    if (fraction || has_fraction_tail) continue;
    tokens.push_back((negative ? "-" : "") + digits);
  }
  return tokens;
}

ExtractionResult extract_integer(std::string_view raw) {
  std::vector<std::string> lines = split(std::string(raw), '\n');
  for (auto it = lines.rbegin(); it != lines.rend(); ++it) {
    std::vector<std::string> tokens = integer_tokens(*it);
    if (tokens.empty()) continue;
    const std::string& tok = tokens.back();
    errno = 0;
    char* end = nullptr;
    long long v = std::strtoll(tok.c_str(), &end, 10);
    std::string value =
        (errno == 0 && end && *end == '\0') ? std::to_string(v) : tok;
    return ExtractionResult::of({AnswerKind::kInteger, std::move(value)});
  }
  return ExtractionResult::fail(ExtractError::kNoAnswerFound);
}

}  // namespace

ExtractionResult normalize_answer(std::string_view raw, AnswerKind kind,
                                  const std::vector<std::string>& choices,
                                  const CueTable& cues) {
  if (trim(raw).empty()) {
    return ExtractionResult::fail(ExtractError::kNoAnswerFound);
  }
  switch (kind) {
    case AnswerKind::kChoiceLabel:
      if (choices.empty()) {
        return ExtractionResult::fail(ExtractError::kNoAnswerFound);
      }
      return extract_choice(raw, choices);
    case AnswerKind::kInteger:
      return extract_integer(raw);
    case AnswerKind::kBoolean: {
      std::optional<bool> polarity = cues.match(fold_case(raw));
      if (!polarity.has_value()) {
        return ExtractionResult::fail(ExtractError::kNoAnswerFound);
      }
      return ExtractionResult::of(
          {AnswerKind::kBoolean, *polarity ? "yes" : "no"});
    }
    case AnswerKind::kFreeText: {
      std::string value = collapse_whitespace(fold_case(raw));
      if (value.empty()) {
        return ExtractionResult::fail(ExtractError::kNoAnswerFound);
      }
      return ExtractionResult::of({AnswerKind::kFreeText, std::move(value)});
    }
  }
  return ExtractionResult::fail(ExtractError::kNoAnswerFound);
}

}  // namespace lingtype
