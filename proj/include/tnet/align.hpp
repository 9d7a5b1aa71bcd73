// Copyright 2026 The Tractatus Network Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// IBM Model 1 word alignment trained by EM on proposition-aligned pairs.
//
// Each target token f of a pair is generated by one source token e of the
// same pair (or by NULL):
//
//   E-step  c(f, e) += t(f|e) / sum_e' t(f|e')
//   M-step  t(f|e)   = c(f, e) / sum_f' c(f', e)
//
// Training starts from a uniform distribution over the target tokens each
// source token co-occurs with.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tnet/corpus.hpp"

namespace tnet {

inline constexpr std::string_view kNullToken = "<NULL>";

struct SentencePair {
  PropNumber number;
  std::vector<std::string> source;
  std::vector<std::string> target;
};

// Tokenized pairs for every row where both versions are present and both
// sides have at least one token. Alignment uses raw tokens: no stopword
// removal, no stemming.
std::vector<SentencePair> sentence_pairs(const ParallelCorpus& corpus,
                                         std::string_view source,
                                         std::string_view target);

struct AlignConfig {
  int iterations = 20;
  bool use_null = true;
  double floor = 1e-12;
};

class AlignmentModel {
 public:
  const std::string& source_language() const { return source_language_; }
  const std::string& target_language() const { return target_language_; }
  bool uses_null() const { return use_null_; }

  // t(f|e); zero for pairs that never co-occurred or unknown tokens. Pass
  // kNullToken as source for the NULL word.
  double prob(std::string_view target, std::string_view source) const;

  // Source vocabulary including the NULL entry at index 0.
  const std::vector<std::string>& source_vocab() const { return source_vocab_; }
  const std::vector<std::string>& target_vocab() const { return target_vocab_; }
  bool knows_source(std::string_view token) const;

  // Distribution t(.|e) for source id e, as (target id, probability) sorted
  // by target id.
  std::vector<std::pair<std::uint32_t, double>> distribution(std::uint32_t e) const;

  // Corpus log-likelihood before training and after every EM iteration.
  const std::vector<double>& log_likelihoods() const { return log_likelihoods_; }
  int iterations() const { return static_cast<int>(log_likelihoods_.size()) - 1; }

  // `source<TAB>target<TAB>probability` lines, sorted, probabilities with
  // 17 significant digits.
  void write_table(std::ostream& out) const;

 private:
  friend class Ibm1Trainer;
  friend AlignmentModel train_ibm1(const std::vector<SentencePair>& pairs,
                                   std::string source_language,
                                   std::string target_language, const AlignConfig& config);

  std::optional<std::uint32_t> source_id(std::string_view token) const;
  std::optional<std::uint32_t> target_id(std::string_view token) const;
  std::optional<std::size_t> param_index(std::uint32_t e, std::uint32_t f) const;

  std::string source_language_;
  std::string target_language_;
  bool use_null_ = true;
  std::vector<std::string> source_vocab_;
  std::vector<std::string> target_vocab_;
  std::unordered_map<std::string, std::uint32_t> source_ids_;
  std::unordered_map<std::string, std::uint32_t> target_ids_;
  // Parameters of source e live in [offsets_[e], offsets_[e + 1]), targets
  // sorted by id.
  std::vector<std::size_t> offsets_;
  std::vector<std::uint32_t> targets_;
  std::vector<double> probs_;
  std::vector<double> log_likelihoods_;
};

// Throws DataError when there are no usable pairs or iterations < 0.
AlignmentModel train_ibm1(const std::vector<SentencePair>& pairs,
                          std::string source_language,
                          std::string target_language,
                          const AlignConfig& config = {});

AlignmentModel train_ibm1(const ParallelCorpus& corpus, std::string_view source,
                          std::string_view target, const AlignConfig& config = {});

// Log-likelihood of the pairs' target sides under the model.
double log_likelihood(const AlignmentModel& model,
                      const std::vector<SentencePair>& pairs);

struct AlignmentLinks {
  PropNumber number;
  std::vector<std::pair<std::size_t, std::size_t>> links;  // (source, target)
};

// Each target index links to its most probable source token (ties to the
// lowest index, NULL first). NULL links are omitted.
AlignmentLinks best_alignment(const AlignmentModel& model,
                              const std::vector<std::string>& source,
                              const std::vector<std::string>& target,
                              PropNumber number = PropNumber::parse("1"));

std::vector<AlignmentLinks> align_all(const AlignmentModel& model,
                                      const std::vector<SentencePair>& pairs);

// `NUMBER<TAB>i-j i-j ...`, 0-based, one line per pair.
void write_alignments(std::ostream& out, const std::vector<AlignmentLinks>& links);

struct TranslationCandidate {
  std::string phrase;
  double score = 0.0;
  std::size_t frequency = 0;
  double mean_probability = 0.0;
};

// Ranked target phrases for a source concept. In every pair containing the
// concept, pick the target span (at most concept length + 2 tokens) that
// maximizes the summed t of tokens linked to the concept; aggregate by
// frequency times mean per-token probability.
std::vector<TranslationCandidate> concept_translations(
    const std::vector<SentencePair>& pairs, const AlignmentModel& model,
    std::string_view concept_phrase);

}  // namespace tnet
