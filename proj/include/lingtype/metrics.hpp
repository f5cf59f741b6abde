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

#ifndef LINGTYPE_METRICS_HPP_
#define LINGTYPE_METRICS_HPP_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lingtype/language.hpp"

namespace lingtype {

/// Per-instance correctness bits (1 = final answer matches gold), ordered by
/// instance_id; the ordering is shared by every language of a run.
struct CorrectnessVector {
  std::vector<int> bits;

  std::size_t size() const { return bits.size(); }
};

/// Fraction of correct final answers. Throws EmptyVector on length 0.
double accuracy(const CorrectnessVector& v);

/// Fraction of indices where both languages are correct or both incorrect.
/// Symmetric; consistency(v, v) == 1. Throws LengthMismatch.
double consistency(const CorrectnessVector& a, const CorrectnessVector& b);

/// Case-folded, punctuation-stripped tokens. Space-delimited languages split
/// on whitespace; CJK languages emit one token per character with embedded
/// Latin runs kept whole.
std::vector<std::string> tokenize(std::string_view text, Lang language);

enum class UnigramFormula { kDice, kJaccard };

/// Multiset token overlap in [0, 1]; 0 when both sides are empty.
/// Dice: 2|A^B| / (|A|+|B|); Jaccard: |A^B| / |AvB|.
double unigram_similarity(const std::vector<std::string>& a,
                          const std::vector<std::string>& b,
                          UnigramFormula formula = UnigramFormula::kDice);

/// Maximum of sim(i, j) over pairs where agree_mask[i][j] is set (answers
/// matched); absent when no pair qualifies. Throws LengthMismatch when the
/// mask shape does not match the two list lengths.
std::optional<double> max_pairwise_similarity(
    const std::vector<std::string>& explanations_a,
    const std::vector<std::string>& explanations_b_backtranslated,
    const std::vector<std::vector<bool>>& agree_mask,
    const std::function<double(const std::string&, const std::string&)>& sim);

/// One row of the pairwise tables: consistency plus similarity means.
struct SimilarityReport {
  Lang lang_a = Lang::kEn;
  Lang lang_b = Lang::kEn;
  double consistency = 0.0;
  std::optional<double> unigram;    // mean over scored questions
  std::optional<double> embedding;  // mean over scored questions
  int n_instances = 0;
  int n_scored_pairs = 0;  // questions with at least one agreeing pair
};

}  // namespace lingtype

#endif  // LINGTYPE_METRICS_HPP_
