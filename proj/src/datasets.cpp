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

#include "lingtype/datasets.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "lingtype/errors.hpp"
#include "lingtype/rng.hpp"
#include "lingtype/text_util.hpp"

namespace lingtype {

using nlohmann::json;

namespace {

json parse_json_line(const std::string& path, int line_no,
                     const std::string& line) {
  json j = json::parse(line, nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    throw ParseError(path + ":" + std::to_string(line_no) +
                     ": malformed JSON record");
  }
  return j;
}

std::string require_string(const json& j, const char* field,
                           const std::string& where) {
  if (!j.contains(field) || !j.at(field).is_string()) {
    throw SchemaError(where + ": missing or non-string field '" +
                      std::string(field) + "'");
  }
  return j.at(field).get<std::string>();
}

/// Calls fn(line_no, json) for every nonempty line. Empty files yield
/// nothing; they are not an error.
template <typename Fn>
void for_each_record(const std::string& path, Fn&& fn) {
  std::istringstream in(read_file(path));
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    fn(line_no, parse_json_line(path, line_no, line));
  }
}

std::string zero_pad(int n, int width) {
  std::string s = std::to_string(n);
  while (static_cast<int>(s.size()) < width) s.insert(s.begin(), '0');
  return s;
}

}  // namespace

std::vector<TaskInstance> load_mcq_dataset(const std::string& path,
                                           const TaskDescriptor& task) {
  task.validate();
  std::vector<TaskInstance> out;
  for_each_record(path, [&](int line_no, const json& j) {
    const std::string where = path + ":" + std::to_string(line_no);
    TaskInstance inst;
    inst.task = task;
    inst.instance_id = task.task_id + "-" + zero_pad(line_no, 4);
    inst.source_language = Lang::kEn;
    inst.input_text = require_string(j, "stem", where);
    if (!j.contains("choices") || !j.at("choices").is_array()) {
      throw SchemaError(where + ": missing field 'choices'");
    }
    for (const auto& c : j.at("choices")) {
      if (!c.is_string()) throw SchemaError(where + ": non-string choice");
      inst.choices.push_back(c.get<std::string>());
    }
    if (task.answer_kind == AnswerKind::kChoiceLabel &&
        inst.choices.size() != 5) {
      throw SchemaError(where + ": expected 5 choices, got " +
                        std::to_string(inst.choices.size()));
    }
    const std::string gold = require_string(j, "gold", where);
    inst.gold_by_language[Lang::kEn] = {task.answer_kind, gold};
    try {
      inst.validate();
    } catch (const SchemaError& e) {
      throw SchemaError(where + ": " + e.what());
    }
    out.push_back(std::move(inst));
  });
  return out;
}

std::vector<QaRecord> load_qa_records(const std::string& path) {
  std::vector<QaRecord> out;
  for_each_record(path, [&](int line_no, const json& j) {
    const std::string where = path + ":" + std::to_string(line_no);
    QaRecord rec;
    rec.question = require_string(j, "question", where);
    rec.answer = require_string(j, "answer", where);
    rec.answer_type = require_string(j, "answer_type", where);
    if (rec.answer.empty()) throw SchemaError(where + ": empty answer");
    out.push_back(std::move(rec));
  });
  return out;
}

std::vector<TaskInstance> build_mcq_from_qa(
    const std::vector<QaRecord>& records, const TaskDescriptor& task,
    const std::map<std::string, std::vector<std::string>>& distractor_pool,
    int k, std::uint64_t seed) {
  std::vector<TaskInstance> out;
  int index = 0;
  for (const QaRecord& rec : records) {
    ++index;
    auto pool_it = distractor_pool.find(rec.answer_type);
    const std::string folded_gold = fold_case(rec.answer);
    std::vector<std::string> candidates;
    if (pool_it != distractor_pool.end()) {
      for (const std::string& d : pool_it->second) {
        if (fold_case(d) != folded_gold) candidates.push_back(d);
      }
    }
    if (static_cast<int>(candidates.size()) < k) {
      throw InsufficientDistractors("answer_type '" + rec.answer_type +
                                    "' has fewer than " + std::to_string(k) +
                                    " usable distractors");
    }
    // Split the seed per record so instances shuffle independently.
    Rng rng(derive_seed(seed, rec.question + "\x1F" + std::to_string(index)));
    std::vector<std::string> chosen;
    std::vector<std::string> pool = candidates;
    for (int i = 0; i < k; ++i) {
      std::size_t pick = static_cast<std::size_t>(rng.next_below(pool.size()));
      chosen.push_back(pool[pick]);
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    chosen.push_back(rec.answer);
    rng.shuffle(chosen);

    TaskInstance inst;
    inst.task = task;
    inst.instance_id = task.task_id + "-" + zero_pad(index, 4);
    inst.source_language = Lang::kEn;
    inst.input_text = rec.question;
    inst.choices = chosen;
    auto gold_pos = std::find_if(chosen.begin(), chosen.end(),
                                 [&](const std::string& c) {
                                   return fold_case(c) == folded_gold;
                                 });
    inst.gold_by_language[Lang::kEn] = {
        AnswerKind::kChoiceLabel,
        std::string(kChoiceLabels[static_cast<std::size_t>(
            gold_pos - chosen.begin())])};
    inst.metadata["answer_type"] = rec.answer_type;
    inst.validate();
    out.push_back(std::move(inst));
  }
  return out;
}

std::vector<TaskInstance> generate_cover_letter_prompts(
    const std::vector<std::string>& persona_pool,
    const std::vector<std::string>& hobby_pool,
    const std::vector<std::string>& specialty_pool,
    const std::vector<std::string>& education_pool,
    const std::vector<std::string>& company_pool,
    const std::vector<std::string>& topic_pool, const TaskDescriptor& task,
    int count, std::uint64_t seed) {
  if (count < 1) throw EmptyCount("cover-letter count must be >= 1");
  for (const auto* pool : {&persona_pool, &hobby_pool, &specialty_pool,
                           &education_pool, &company_pool, &topic_pool}) {
    if (pool->empty()) throw EmptyPool("cover-letter pool is empty");
  }
  std::vector<TaskInstance> out;
  for (int i = 0; i < count; ++i) {
    Rng rng(derive_seed(seed, "coverletter/" + std::to_string(i)));
    auto pick = [&](const std::vector<std::string>& pool) {
      return pool[static_cast<std::size_t>(rng.next_below(pool.size()))];
    };
    CoverLetterSpec spec;
    spec.persona_name = pick(persona_pool);
    spec.hobby = pick(hobby_pool);
    spec.specialty = pick(specialty_pool);
    spec.education = pick(education_pool);
    spec.company = pick(company_pool);
    spec.seed = seed;
    const int n_topics = 1 + static_cast<int>(rng.next_below(
                                 std::min<std::uint64_t>(3, topic_pool.size())));
    std::vector<std::string> topics = topic_pool;
    rng.shuffle(topics);
    topics.resize(static_cast<std::size_t>(n_topics));
    spec.topics = topics;

    std::string prompt = "You are " + spec.persona_name + " from " +
                         spec.education + ". You like " + spec.hobby +
                         ". You are great at " + spec.specialty +
                         ". You want to join " + spec.company +
                         " company. Write a cover letter about: ";
    for (std::size_t t = 0; t < spec.topics.size(); ++t) {
      if (t > 0) prompt += (t + 1 == spec.topics.size()) ? " and " : " ";
      prompt += spec.topics[t];
    }

    TaskInstance inst;
    inst.task = task;
    inst.instance_id = task.task_id + "-" + zero_pad(i + 1, 4);
    inst.source_language = Lang::kEn;
    inst.input_text = prompt;
    inst.metadata["persona"] = spec.persona_name;
    inst.metadata["company"] = spec.company;
    inst.validate();
    out.push_back(std::move(inst));
  }
  return out;
}

std::vector<TaskInstance> load_pun_dataset(const std::string& path,
                                           const TaskDescriptor& task) {
  std::vector<TaskInstance> out;
  for_each_record(path, [&](int line_no, const json& j) {
    const std::string where = path + ":" + std::to_string(line_no);
    TaskInstance inst;
    inst.task = task;
    inst.instance_id = task.task_id + "-" + zero_pad(line_no, 4);
    inst.source_language = Lang::kEn;
    inst.input_text = require_string(j, "sentence", where);
    if (!j.contains("gold_by_language") ||
        !j.at("gold_by_language").is_object()) {
      throw SchemaError(where + ": missing field 'gold_by_language'");
    }
    for (const auto& [code, value] : j.at("gold_by_language").items()) {
      if (!value.is_string()) {
        throw SchemaError(where + ": non-string gold for '" + code + "'");
      }
      inst.gold_by_language[parse_lang(code)] = {AnswerKind::kBoolean,
                                                 value.get<std::string>()};
    }
    if (inst.gold_by_language.empty()) {
      throw SchemaError(where + ": gold_by_language has no entries");
    }
    try {
      inst.validate();
    } catch (const SchemaError& e) {
      throw SchemaError(where + ": " + e.what());
    }
    out.push_back(std::move(inst));
  });
  return out;
}

std::vector<std::string> load_pool(const std::string& path) {
  std::vector<std::string> out;
  std::istringstream in(read_file(path));
  std::string line;
  while (std::getline(in, line)) {
    std::string entry = trim(line);
    if (entry.empty() || entry[0] == '#') continue;
    out.push_back(std::move(entry));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Instance serialization

std::string instance_to_json(const TaskInstance& inst) {
  json j;
  j["instance_id"] = inst.instance_id;
  j["task"] = {{"task_id", inst.task.task_id},
               {"category", std::string(to_string(inst.task.category))},
               {"translatability",
                std::string(to_string(inst.task.translatability))},
               {"answer_kind", std::string(to_string(inst.task.answer_kind))}};
  j["source_language"] = std::string(lang_code(inst.source_language));
  j["input_text"] = inst.input_text;
  j["choices"] = inst.choices;
  json golds = json::object();
  for (const auto& [lang, g] : inst.gold_by_language) {
    golds[std::string(lang_code(lang))] = g.value;
  }
  j["gold_by_language"] = golds;
  j["metadata"] = inst.metadata;
  return j.dump();
}

TaskInstance instance_from_json(const std::string& json_line) {
  json j = json::parse(json_line, nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    throw ParseError("malformed instance record");
  }
  TaskInstance inst;
  inst.instance_id = require_string(j, "instance_id", "instance");
  const json& t = j.at("task");
  inst.task.task_id = require_string(t, "task_id", "instance.task");
  inst.task.category =
      parse_category(require_string(t, "category", "instance.task"));
  inst.task.translatability = parse_translatability(
      require_string(t, "translatability", "instance.task"));
  inst.task.answer_kind =
      parse_answer_kind(require_string(t, "answer_kind", "instance.task"));
  inst.source_language =
      parse_lang(require_string(j, "source_language", "instance"));
  inst.input_text = require_string(j, "input_text", "instance");
  for (const auto& c : j.at("choices")) {
    inst.choices.push_back(c.get<std::string>());
  }
  for (const auto& [code, value] : j.at("gold_by_language").items()) {
    inst.gold_by_language[parse_lang(code)] = {inst.task.answer_kind,
                                               value.get<std::string>()};
  }
  if (j.contains("metadata")) {
    for (const auto& [key, value] : j.at("metadata").items()) {
      inst.metadata[key] = value.get<std::string>();
    }
  }
  inst.validate();
  return inst;
}

void save_instances(const std::string& path,
                    const std::vector<TaskInstance>& instances) {
  std::string body;
  for (const TaskInstance& inst : instances) {
    body += instance_to_json(inst);
    body += '\n';
  }
  write_file_atomic(path, body);
}

std::vector<TaskInstance> load_instances(const std::string& path) {
  std::vector<TaskInstance> out;
  std::istringstream in(read_file(path));
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    out.push_back(instance_from_json(line));
  }
  return out;
}

}  // namespace lingtype
