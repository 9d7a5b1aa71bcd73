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

#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "tnet/corpus.hpp"

namespace tnet {

// Lowercased word tokens. A token is a run of letters (any supported script)
// and digits; a hyphen or apostrophe between two such characters stays inside
// the token. Single-character tokens that are not letters are dropped.
std::vector<std::string> tokenize(std::string_view text);

struct SuffixRule {
  std::string suffix;
  std::string replacement;
};

// Per-language normalization data.
class LangResources {
 public:
  LangResources() = default;
  LangResources(std::string language, std::unordered_set<std::string> stopwords,
                std::vector<SuffixRule> rules,
                std::unordered_map<std::string, std::string> lemmas = {});

  // Reads `<dir>/stopwords.txt`, `<dir>/stem_rules.tsv` and, when present,
  // `<dir>/lemmas.tsv`. Missing stopword or rule files yield empty tables.
  static LangResources load(const std::filesystem::path& dir,
                            std::string language);

  const std::string& language() const { return language_; }
  bool is_stopword(std::string_view token) const;
  // True when the token is the target of some lemma entry.
  bool is_lemma(std::string_view token) const;
  const std::unordered_set<std::string>& stopwords() const { return stopwords_; }
  const std::vector<SuffixRule>& rules() const { return rules_; }
  const std::unordered_map<std::string, std::string>& lemmas() const {
    return lemmas_;
  }

  // Shortest stem (in code points) a suffix rule may leave behind.
  static constexpr std::size_t kMinStem = 3;

 private:
  std::string language_;
  std::unordered_set<std::string> stopwords_;
  std::vector<SuffixRule> rules_;  // longest suffix first
  std::unordered_map<std::string, std::string> lemmas_;
  std::unordered_set<std::string> lemma_values_;
};

std::unordered_set<std::string> read_stopwords(std::istream& in);
std::vector<SuffixRule> read_stem_rules(std::istream& in);
std::unordered_map<std::string, std::string> read_lemmas(std::istream& in);

// Lemma lookup first; otherwise suffix rules are applied until none matches,
// checking the lemma table again after each rewrite.
std::string stem(std::string_view token, const LangResources& resources);

// Multiset of normalized tokens, stored sorted by token.
class TokenBag {
 public:
  TokenBag() = default;
  TokenBag(PropNumber owner, std::string language,
           const std::vector<std::string>& tokens);

  const PropNumber& owner() const { return owner_; }
  const std::string& language() const { return language_; }
  const std::vector<std::pair<std::string, std::size_t>>& counts() const {
    return counts_;
  }
  std::size_t size() const { return size_; }
  std::size_t distinct() const { return counts_.size(); }
  bool empty() const { return size_ == 0; }
  std::size_t count(std::string_view token) const;

  friend bool operator==(const TokenBag& a, const TokenBag& b) {
    return a.counts_ == b.counts_;
  }

 private:
  PropNumber owner_ = PropNumber::parse("1");
  std::string language_;
  std::vector<std::pair<std::string, std::size_t>> counts_;
  std::size_t size_ = 0;
};

// tokenize -> drop stopwords (surface form) -> stem -> multiset. Stems that
// coincide with a stopword are dropped as well.
TokenBag normalize(const Proposition& prop, const LangResources& resources);

}  // namespace tnet
