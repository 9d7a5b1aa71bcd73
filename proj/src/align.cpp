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

#include "tnet/align.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <set>
#include <sstream>
#include <tuple>

#include "tnet/error.hpp"
#include "tnet/textproc.hpp"

namespace tnet {

std::vector<SentencePair> sentence_pairs(const ParallelCorpus& corpus,
                                         std::string_view source,
                                         std::string_view target) {
  const auto src = corpus.find_version(source);
  const auto tgt = corpus.find_version(target);
  if (!src) throw DataError("no unique version '" + std::string(source) + "' in corpus");
  if (!tgt) throw DataError("no unique version '" + std::string(target) + "' in corpus");
  std::vector<SentencePair> pairs;
  for (const auto& row : corpus.rows()) {
    const Proposition* ps = corpus.at(row, *src);
    const Proposition* pt = corpus.at(row, *tgt);
    if (!ps || !pt) continue;
    SentencePair pair{row.number, tokenize(ps->text), tokenize(pt->text)};
    if (pair.source.empty() || pair.target.empty()) continue;
    pairs.push_back(std::move(pair));
  }
  return pairs;
}

std::optional<std::uint32_t> AlignmentModel::source_id(std::string_view token) const {
  const auto it = source_ids_.find(std::string(token));
  if (it == source_ids_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::uint32_t> AlignmentModel::target_id(std::string_view token) const {
  const auto it = target_ids_.find(std::string(token));
  if (it == target_ids_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> AlignmentModel::param_index(std::uint32_t e,
                                                       std::uint32_t f) const {
  const auto begin = targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[e]);
  const auto end = targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[e + 1]);
  const auto it = std::lower_bound(begin, end, f);
  if (it == end || *it != f) return std::nullopt;
  return static_cast<std::size_t>(it - targets_.begin());
}

double AlignmentModel::prob(std::string_view target, std::string_view source) const {
  const auto e = source_id(source);
  const auto f = target_id(target);
  if (!e || !f) return 0.0;
  const auto idx = param_index(*e, *f);
  return idx ? probs_[*idx] : 0.0;
}

bool AlignmentModel::knows_source(std::string_view token) const {
  return token != kNullToken && source_id(token).has_value();
}

std::vector<std::pair<std::uint32_t, double>> AlignmentModel::distribution(
    std::uint32_t e) const {
  std::vector<std::pair<std::uint32_t, double>> out;
  for (std::size_t k = offsets_.at(e); k < offsets_.at(e + 1); ++k) {
    out.emplace_back(targets_[k], probs_[k]);
  }
  return out;
}

void AlignmentModel::write_table(std::ostream& out) const {
  std::vector<std::tuple<std::string, std::string, double>> rows;
  for (std::uint32_t e = 0; e + 1 < offsets_.size(); ++e) {
    for (std::size_t k = offsets_[e]; k < offsets_[e + 1]; ++k) {
      rows.emplace_back(source_vocab_[e], target_vocab_[targets_[k]], probs_[k]);
    }
  }
  std::sort(rows.begin(), rows.end());
  std::ostringstream line;
  for (const auto& [e, f, p] : rows) {
    line.str({});
    line << e << '\t' << f << '\t' << std::setprecision(17) << p << '\n';
    out << line.str();
  }
}

// Owns the flattened per-pair parameter indices used by every EM step.
class Ibm1Trainer {
 public:
  Ibm1Trainer(const std::vector<SentencePair>& pairs, AlignmentModel& model)
      : model_(model) {
    auto& m = model_;
    m.source_vocab_.emplace_back(kNullToken);
    m.source_ids_.emplace(std::string(kNullToken), 0);
    auto intern = [](std::vector<std::string>& vocab,
                     std::unordered_map<std::string, std::uint32_t>& ids,
                     const std::string& token) {
      auto [it, fresh] = ids.emplace(token, static_cast<std::uint32_t>(vocab.size()));
      if (fresh) vocab.push_back(token);
      return it->second;
    };

    std::vector<std::vector<std::uint32_t>> src_ids, tgt_ids;
    for (const auto& pair : pairs) {
      auto& s = src_ids.emplace_back();
      if (m.use_null_) s.push_back(0);
      for (const auto& tok : pair.source) s.push_back(intern(m.source_vocab_, m.source_ids_, tok));
      auto& t = tgt_ids.emplace_back();
      for (const auto& tok : pair.target) t.push_back(intern(m.target_vocab_, m.target_ids_, tok));
    }

    // Co-occurrence sets give the parameter layout.
    std::vector<std::set<std::uint32_t>> cooc(m.source_vocab_.size());
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      for (auto e : src_ids[p]) cooc[e].insert(tgt_ids[p].begin(), tgt_ids[p].end());
    }
    m.offsets_.assign(1, 0);
    for (const auto& targets : cooc) {
      m.targets_.insert(m.targets_.end(), targets.begin(), targets.end());
      m.offsets_.push_back(m.targets_.size());
    }
    m.probs_.assign(m.targets_.size(), 0.0);
    for (std::uint32_t e = 0; e < cooc.size(); ++e) {
      const auto n = m.offsets_[e + 1] - m.offsets_[e];
      for (std::size_t k = m.offsets_[e]; k < m.offsets_[e + 1]; ++k) {
        m.probs_[k] = 1.0 / static_cast<double>(n);
      }
    }

    for (std::size_t p = 0; p < pairs.size(); ++p) {
      Block block;
      block.rows = src_ids[p].size();
      block.cols = tgt_ids[p].size();
      block.index.reserve(block.rows * block.cols);
      for (std::size_t j = 0; j < block.cols; ++j) {
        for (std::size_t i = 0; i < block.rows; ++i) {
          block.index.push_back(*m.param_index(src_ids[p][i], tgt_ids[p][j]));
        }
      }
      blocks_.push_back(std::move(block));
    }
  }

  double log_likelihood() const {
    double ll = 0.0;
    for (const auto& b : blocks_) {
      const double norm = std::log(static_cast<double>(b.rows));
      for (std::size_t j = 0; j < b.cols; ++j) {
        double sum = 0.0;
        for (std::size_t i = 0; i < b.rows; ++i) sum += model_.probs_[b.index[j * b.rows + i]];
        ll += std::log(sum) - norm;
      }
    }
    return ll;
  }

  void em_step(double floor) {
    auto& m = model_;
    std::vector<double> counts(m.probs_.size(), 0.0);
    for (const auto& b : blocks_) {
      for (std::size_t j = 0; j < b.cols; ++j) {
        const std::size_t* idx = &b.index[j * b.rows];
        double total = 0.0;
        for (std::size_t i = 0; i < b.rows; ++i) total += m.probs_[idx[i]];
        for (std::size_t i = 0; i < b.rows; ++i) counts[idx[i]] += m.probs_[idx[i]] / total;
      }
    }
    for (std::size_t e = 0; e + 1 < m.offsets_.size(); ++e) {
      const auto begin = m.offsets_[e];
      const auto end = m.offsets_[e + 1];
      if (begin == end) continue;
      double total = 0.0;
      for (std::size_t k = begin; k < end; ++k) total += counts[k];
      if (total <= 0.0) continue;
      double renorm = 0.0;
      for (std::size_t k = begin; k < end; ++k) {
        m.probs_[k] = std::max(counts[k] / total, floor);
        renorm += m.probs_[k];
      }
      for (std::size_t k = begin; k < end; ++k) m.probs_[k] /= renorm;
    }
  }

 private:
  struct Block {
    std::size_t rows = 0;  // source tokens incl. NULL
    std::size_t cols = 0;  // target tokens
    std::vector<std::size_t> index;  // column-major: [j * rows + i]
  };

  AlignmentModel& model_;
  std::vector<Block> blocks_;
};

AlignmentModel train_ibm1(const std::vector<SentencePair>& pairs,
                          std::string source_language, std::string target_language,
                          const AlignConfig& config) {
  if (config.iterations < 0) throw DataError("iterations must be >= 0");
  std::vector<SentencePair> usable;
  for (const auto& p : pairs) {
    if (!p.source.empty() && !p.target.empty()) usable.push_back(p);
  }
  if (usable.empty()) throw DataError("no overlapping sentence pairs to train on");

  AlignmentModel model;
  model.source_language_ = std::move(source_language);
  model.target_language_ = std::move(target_language);
  model.use_null_ = config.use_null;

  Ibm1Trainer trainer(usable, model);
  model.log_likelihoods_.push_back(trainer.log_likelihood());
  for (int it = 0; it < config.iterations; ++it) {
    trainer.em_step(config.floor);
    model.log_likelihoods_.push_back(trainer.log_likelihood());
  }
  return model;
}

AlignmentModel train_ibm1(const ParallelCorpus& corpus, std::string_view source,
                          std::string_view target, const AlignConfig& config) {
  return train_ibm1(sentence_pairs(corpus, source, target), std::string(source),
                    std::string(target), config);
}

double log_likelihood(const AlignmentModel& model, const std::vector<SentencePair>& pairs) {
  double ll = 0.0;
  for (const auto& p : pairs) {
    const std::size_t rows = p.source.size() + (model.uses_null() ? 1 : 0);
    if (rows == 0) continue;
    for (const auto& f : p.target) {
      double sum = model.uses_null() ? model.prob(f, kNullToken) : 0.0;
      for (const auto& e : p.source) sum += model.prob(f, e);
      ll += std::log(sum) - std::log(static_cast<double>(rows));
    }
  }
  return ll;
}

AlignmentLinks best_alignment(const AlignmentModel& model,
                              const std::vector<std::string>& source,
                              const std::vector<std::string>& target, PropNumber number) {
  AlignmentLinks out{std::move(number), {}};
  for (std::size_t j = 0; j < target.size(); ++j) {
    double best = model.uses_null() ? model.prob(target[j], kNullToken) : 0.0;
    std::optional<std::size_t> best_i;
    for (std::size_t i = 0; i < source.size(); ++i) {
      const double p = model.prob(target[j], source[i]);
      if (p > best) {
        best = p;
        best_i = i;
      }
    }
    if (best_i) out.links.emplace_back(*best_i, j);
  }
  return out;
}

std::vector<AlignmentLinks> align_all(const AlignmentModel& model,
                                      const std::vector<SentencePair>& pairs) {
  std::vector<AlignmentLinks> out;
  out.reserve(pairs.size());
  for (const auto& p : pairs) out.push_back(best_alignment(model, p.source, p.target, p.number));
  return out;
}

void write_alignments(std::ostream& out, const std::vector<AlignmentLinks>& links) {
  for (const auto& l : links) {
    out << l.number.str() << '\t';
    for (std::size_t k = 0; k < l.links.size(); ++k) {
      if (k) out << ' ';
      out << l.links[k].first << '-' << l.links[k].second;
    }
    out << '\n';
  }
}

std::vector<TranslationCandidate> concept_translations(
    const std::vector<SentencePair>& pairs, const AlignmentModel& model,
    std::string_view concept_phrase) {
  const auto concept_tokens = tokenize(concept_phrase);
  if (concept_tokens.empty()) return {};
  for (const auto& t : concept_tokens) {
    if (!model.knows_source(t)) return {};
  }
  const std::size_t max_span = concept_tokens.size() + 2;

  struct Tally {
    std::size_t frequency = 0;
    double prob_sum = 0.0;
  };
  std::map<std::string, Tally> tally;

  for (const auto& pair : pairs) {
    const auto& src = pair.source;
    if (src.size() < concept_tokens.size()) continue;
    const auto links = best_alignment(model, src, pair.target, pair.number);
    for (std::size_t start = 0; start + concept_tokens.size() <= src.size(); ++start) {
      if (!std::equal(concept_tokens.begin(), concept_tokens.end(), src.begin() + static_cast<std::ptrdiff_t>(start))) {
        continue;
      }
      const std::size_t stop = start + concept_tokens.size();
      // Weight of target tokens linked into the concept occurrence.
      std::vector<double> weight(pair.target.size(), 0.0);
      std::vector<bool> linked(pair.target.size(), false);
      for (const auto& [i, j] : links.links) {
        if (i >= start && i < stop) {
          weight[j] = model.prob(pair.target[j], src[i]);
          linked[j] = true;
        }
      }
      double best_score = 0.0;
      std::size_t best_a = 0, best_b = 0, best_linked = 0;
      for (std::size_t a = 0; a < pair.target.size(); ++a) {
        double score = 0.0;
        std::size_t n_linked = 0;
        for (std::size_t b = a; b < pair.target.size() && b - a + 1 <= max_span; ++b) {
          score += weight[b];
          n_linked += linked[b] ? 1 : 0;
          // Ties go to the shorter span, then the earlier one.
          const std::size_t len = b - a + 1;
          if (n_linked > 0 && (score > best_score ||
                               (score == best_score && len < best_b - best_a + 1))) {
            best_score = score;
            best_a = a;
            best_b = b;
            best_linked = n_linked;
          }
        }
      }
      if (best_linked == 0) continue;
      std::string phrase;
      for (std::size_t k = best_a; k <= best_b; ++k) {
        if (k > best_a) phrase.push_back(' ');
        phrase += pair.target[k];
      }
      auto& t = tally[phrase];
      ++t.frequency;
      t.prob_sum += best_score / static_cast<double>(best_linked);
    }
  }

  std::vector<TranslationCandidate> out;
  for (const auto& [phrase, t] : tally) {
    const double mean = t.prob_sum / static_cast<double>(t.frequency);
    out.push_back({phrase, static_cast<double>(t.frequency) * mean, t.frequency, mean});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.phrase < b.phrase;
  });
  return out;
}

}  // namespace tnet
