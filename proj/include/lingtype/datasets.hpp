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

#ifndef LINGTYPE_DATASETS_HPP_
#define LINGTYPE_DATASETS_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lingtype/core.hpp"

namespace lingtype {

/// JSONL record: {"question": ..., "answer": ..., "answer_type": ...}
struct QaRecord {
  std::string question;
  std::string answer;
  std::string answer_type;  // person | place | other
};

/// Constraints of one generated cover-letter prompt. Regeneration from the
/// same pools and seed is bit-identical.
struct CoverLetterSpec {
  std::string persona_name;
  std::string hobby;
  std::string specialty;
  std::string education;
  std::string company;
  std::vector<std::string> topics;  // 1-3 entries
  std::uint64_t seed = 0;
};

/// Loads MCQ-style JSONL ({"stem", "choices", "gold"}). choice-label tasks
/// require exactly 5 choices; integer tasks use the same schema with an
/// empty choices array and an integer gold. Gold is recorded under the
/// source language (en).
std::vector<TaskInstance> load_mcq_dataset(const std::string& path,
                                           const TaskDescriptor& task);

std::vector<QaRecord> load_qa_records(const std::string& path);

/// Turns QA records into 5-choice MCQ instances: the gold answer plus k
/// type-matched distractors, shuffled per-instance by a splittable seed.
std::vector<TaskInstance> build_mcq_from_qa(
    const std::vector<QaRecord>& records, const TaskDescriptor& task,
    const std::map<std::string, std::vector<std::string>>& distractor_pool,
    int k, std::uint64_t seed);

/// Generates Articulating/TV free-text instances from a fixed English
/// template over the given pools. Deterministic in (pools, seed).
std::vector<TaskInstance> generate_cover_letter_prompts(
    const std::vector<std::string>& persona_pool,
    const std::vector<std::string>& hobby_pool,
    const std::vector<std::string>& specialty_pool,
    const std::vector<std::string>& education_pool,
    const std::vector<std::string>& company_pool,
    const std::vector<std::string>& topic_pool, const TaskDescriptor& task,
    int count, std::uint64_t seed);

/// Loads pun JSONL ({"sentence", "gold_by_language"}) as boolean TV
/// instances. Languages without an explicit gold stay absent.
std::vector<TaskInstance> load_pun_dataset(const std::string& path,
                                           const TaskDescriptor& task);

/// Plain-text pool file, one entry per line, '#' comments skipped.
std::vector<std::string> load_pool(const std::string& path);

// Instance (de)serialization used by artifacts and the round-trip property.
std::string instance_to_json(const TaskInstance& inst);
TaskInstance instance_from_json(const std::string& json_line);
void save_instances(const std::string& path,
                    const std::vector<TaskInstance>& instances);
std::vector<TaskInstance> load_instances(const std::string& path);

}  // namespace lingtype

#endif  // LINGTYPE_DATASETS_HPP_
