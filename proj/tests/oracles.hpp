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

// Reference implementations used as test oracles. They are deliberately
// naive and share no code with the library.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iterator>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace tnet::oracle {

struct Fraction {
  std::uint64_t num = 0;
  std::uint64_t den = 1;
};

// |a ∩ b| / max(|a|, |b|) via std::set_intersection on sorted sequences,
// which has multiset semantics.
inline Fraction similarity(std::vector<std::string> a, std::vector<std::string> b,
                           bool set_mode = false) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (set_mode) {
    a.erase(std::unique(a.begin(), a.end()), a.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
  }
  const auto longest = std::max(a.size(), b.size());
  if (longest == 0) return {0, 1};
  std::vector<std::string> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  return {common.size(), longest};
}

inline bool exceeds(const Fraction& f, std::uint64_t num, std::uint64_t den) {
  return f.num * den > num * f.den;
}

// Index pairs (i < j) whose similarity exceeds num/den.
inline std::set<std::pair<std::size_t, std::size_t>> network(
    const std::vector<std::vector<std::string>>& bags, std::uint64_t num, std::uint64_t den,
    bool set_mode = false) {
  std::set<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < bags.size(); ++i) {
    for (std::size_t j = i + 1; j < bags.size(); ++j) {
      if (exceeds(similarity(bags[i], bags[j], set_mode), num, den)) out.emplace(i, j);
    }
  }
  return out;
}

// IBM Model 1 on word strings, dense maps, NULL written as "".
struct Em {
  std::map<std::pair<std::string, std::string>, double> t;  // (source, target)
  std::vector<double> log_likelihood;
};

inline Em ibm1(const std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>>& pairs,
               int iterations, bool use_null = true) {
  Em em;
  auto sources = [&](const std::vector<std::string>& src) {
    std::vector<std::string> out;
    if (use_null) out.push_back("");
    out.insert(out.end(), src.begin(), src.end());
    return out;
  };
  std::map<std::string, std::set<std::string>> cooc;
  for (const auto& [src, tgt] : pairs) {
    for (const auto& e : sources(src)) cooc[e].insert(tgt.begin(), tgt.end());
  }
  for (const auto& [e, fs] : cooc) {
    for (const auto& f : fs) em.t[{e, f}] = 1.0 / static_cast<double>(fs.size());
  }
  auto ll = [&] {
    double total = 0.0;
    for (const auto& [src, tgt] : pairs) {
      const auto es = sources(src);
      for (const auto& f : tgt) {
        double z = 0.0;
        for (const auto& e : es) z += em.t[{e, f}];
        total += std::log(z / static_cast<double>(es.size()));
      }
    }
    return total;
  };
  em.log_likelihood.push_back(ll());
  for (int it = 0; it < iterations; ++it) {
    std::map<std::pair<std::string, std::string>, double> count;
    std::map<std::string, double> total;
    for (const auto& [src, tgt] : pairs) {
      const auto es = sources(src);
      for (const auto& f : tgt) {
        double z = 0.0;
        for (const auto& e : es) z += em.t[{e, f}];
        for (const auto& e : es) {
          const double c = em.t[{e, f}] / z;
          count[{e, f}] += c;
          total[e] += c;
        }
      }
    }
    for (auto& [key, value] : em.t) value = count[key] / total[key.first];
    em.log_likelihood.push_back(ll());
  }
  return em;
}

// Concept spans by exhaustive search: at each position take the longest
// form of any concept that fits, then jump past it.
struct Span {
  std::string id;
  std::size_t start;
  std::size_t end;  // inclusive
};

using Lexicon = std::vector<std::pair<std::string, std::vector<std::vector<std::string>>>>;

inline std::vector<Span> spans(const std::vector<std::string>& tokens, const Lexicon& lexicon) {
  std::vector<Span> out;
  std::size_t i = 0;
  while (i < tokens.size()) {
    std::size_t best = 0;
    std::string best_id;
    for (const auto& [id, forms] : lexicon) {
      for (const auto& form : forms) {
        if (form.size() <= best || i + form.size() > tokens.size()) continue;
        if (std::equal(form.begin(), form.end(), tokens.begin() + static_cast<long>(i))) {
          best = form.size();
          best_id = id;
        }
      }
    }
    if (best == 0) {
      ++i;
      continue;
    }
    out.push_back({best_id, i, i + best - 1});
    i += best;
  }
  return out;
}

// Concept edges (a < b) with the number of supporting propositions.
inline std::map<std::pair<std::string, std::string>, std::size_t> concept_edges(
    const std::vector<std::vector<std::string>>& propositions, const Lexicon& lexicon,
    std::size_t single_window, std::size_t multi_window, std::size_t min_propositions) {
  std::map<std::pair<std::string, std::string>, std::size_t> support;
  for (const auto& tokens : propositions) {
    const auto found = spans(tokens, lexicon);
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& a : found) {
      for (const auto& b : found) {
        if (a.id >= b.id) continue;
        const std::size_t gap = a.end < b.start ? b.start - a.end - 1 : a.start - b.end - 1;
        const bool multi = a.end > a.start || b.end > b.start;
        if (gap <= (multi ? multi_window : single_window)) seen.emplace(a.id, b.id);
      }
    }
    for (const auto& p : seen) ++support[p];
  }
  std::erase_if(support, [&](const auto& kv) { return kv.second < min_propositions; });
  return support;
}

// Dice coefficient over padded, lowercased ASCII character n-grams.
inline double dice(const std::string& a, const std::string& b, std::size_t n) {
  auto grams = [n](const std::string& s) {
    std::string padded = std::string(n - 1, '#');
    for (char c : s) padded += static_cast<char>(c >= 'A' && c <= 'Z' ? c - 'A' + 'a' : c);
    padded += std::string(n - 1, '#');
    std::vector<std::string> out;
    for (std::size_t i = 0; i + n <= padded.size(); ++i) out.push_back(padded.substr(i, n));
    std::sort(out.begin(), out.end());
    return out;
  };
  const auto ga = grams(a);
  const auto gb = grams(b);
  if (ga.empty() && gb.empty()) return 0.0;
  std::vector<std::string> common;
  std::set_intersection(ga.begin(), ga.end(), gb.begin(), gb.end(), std::back_inserter(common));
  return 2.0 * static_cast<double>(common.size()) / static_cast<double>(ga.size() + gb.size());
}

}  // namespace tnet::oracle
