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

// Character n-gram fuzzy search over node labels. Labels and queries are case
// folded and padded with n-1 '#' markers on each side; matches are scored by
// the Dice coefficient over n-gram multisets.

#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tnet {

// n-gram -> multiplicity.
using NGramProfile = std::map<std::u32string, std::size_t>;

inline constexpr char32_t kPadMarker = U'#';

NGramProfile ngram_profile(std::string_view text, std::size_t n);

struct SearchHit {
  std::string id;
  double score = 0.0;
};

class NGramIndex {
 public:
  // Throws DataError when n < 1 or labels is empty.
  NGramIndex(const std::map<std::string, std::string>& labels, std::size_t n = 3);

  std::size_t n() const { return n_; }
  std::size_t size() const { return profiles_.size(); }
  const std::map<std::string, NGramProfile>& profiles() const { return profiles_; }
  const std::map<std::u32string, std::set<std::string>>& postings() const {
    return postings_;
  }

  // Best k hits, descending score then ascending id; zero scores omitted.
  std::vector<SearchHit> query(std::string_view text, std::size_t k) const;

 private:
  std::size_t n_;
  std::map<std::string, NGramProfile> profiles_;
  std::map<std::string, std::size_t> profile_sizes_;
  std::map<std::u32string, std::set<std::string>> postings_;
};

NGramIndex build_index(const std::map<std::string, std::string>& labels, std::size_t n = 3);

}  // namespace tnet
