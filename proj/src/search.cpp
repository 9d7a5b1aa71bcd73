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

#include "tnet/search.hpp"

#include <algorithm>

#include "tnet/error.hpp"
#include "tnet/utf8.hpp"

namespace tnet {

NGramProfile ngram_profile(std::string_view text, std::size_t n) {
  NGramProfile profile;
  if (n == 0) return profile;
  std::u32string padded(n - 1, kPadMarker);
  for (char32_t cp : utf8::decode(text)) padded.push_back(utf8::to_lower(cp));
  padded.append(n - 1, kPadMarker);
  if (padded.size() < n) return profile;
  for (std::size_t i = 0; i + n <= padded.size(); ++i) ++profile[padded.substr(i, n)];
  return profile;
}

namespace {

std::size_t total(const NGramProfile& p) {
  std::size_t sum = 0;
  for (const auto& [gram, count] : p) sum += count;
  return sum;
}

}  // namespace

NGramIndex::NGramIndex(const std::map<std::string, std::string>& labels, std::size_t n)
    : n_(n) {
  if (n < 1) throw DataError("n-gram size must be >= 1");
  if (labels.empty()) throw DataError("cannot index an empty label set");
  for (const auto& [id, label] : labels) {
    auto profile = ngram_profile(label, n);
    for (const auto& [gram, count] : profile) postings_[gram].insert(id);
    profile_sizes_[id] = total(profile);
    profiles_.emplace(id, std::move(profile));
  }
}

std::vector<SearchHit> NGramIndex::query(std::string_view text, std::size_t k) const {
  if (k == 0) return {};
  const auto q = ngram_profile(text, n_);
  const std::size_t q_size = total(q);

  std::map<std::string, std::size_t> overlap;
  for (const auto& [gram, count] : q) {
    const auto it = postings_.find(gram);
    if (it == postings_.end()) continue;
    for (const auto& id : it->second) {
      overlap[id] += std::min(count, profiles_.at(id).at(gram));
    }
  }

  std::vector<SearchHit> hits;
  hits.reserve(overlap.size());
  for (const auto& [id, common] : overlap) {
    const double denom = static_cast<double>(q_size + profile_sizes_.at(id));
    hits.push_back({id, 2.0 * static_cast<double>(common) / denom});
  }
  std::sort(hits.begin(), hits.end(), [](const SearchHit& a, const SearchHit& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.id < b.id;
  });
  if (hits.size() > k) hits.resize(k);
  return hits;
}

NGramIndex build_index(const std::map<std::string, std::string>& labels, std::size_t n) {
  return NGramIndex(labels, n);
}

}  // namespace tnet
