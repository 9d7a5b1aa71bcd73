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

#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"
#include "tnet/error.hpp"
#include "tnet/search.hpp"

using namespace tnet;

TEST_CASE("padded trigram profile") {
  const auto p = ngram_profile("welt", 3);
  const NGramProfile expect = {{U"##w", 1}, {U"#we", 1}, {U"wel", 1},
                               {U"elt", 1}, {U"lt#", 1}, {U"t##", 1}};
  CHECK(p == expect);
  CHECK(ngram_profile("WELT", 3) == p);
  CHECK(ngram_profile("aaaa", 2).at(U"aa") == 3);
}

TEST_CASE("profiles work on code points") {
  const auto p = ngram_profile("\xC3\x9C" "ber", 3);  // Über
  CHECK(p.count(U"##ü") == 1);
  CHECK(p.count(U"übe") == 1);
}

TEST_CASE("index preconditions") {
  CHECK_THROWS_AS(NGramIndex({}, 3), DataError);
  CHECK_THROWS_AS(NGramIndex({{"a", "x"}}, 0), DataError);
}

TEST_CASE("exact label ranks first with score 1") {
  const NGramIndex index({{"1", "Die Welt ist alles"}, {"2", "Die Welt"}, {"3", "Der Fall"}});
  const auto hits = index.query("Die Welt", 5);
  REQUIRE_FALSE(hits.empty());
  CHECK(hits[0].id == "2");
  CHECK(hits[0].score == 1.0);
  CHECK(index.query("qqqq", 5).empty());
}

TEST_CASE("partial query prefers the closer label") {
  const NGramIndex index({{"a", "die welt"}, {"b", "der fall"}});
  const auto hits = index.query("welt", 5);
  REQUIRE(hits.size() == 1);
  CHECK(hits[0].id == "a");
  CHECK(hits[0].score == doctest::Approx(oracle::dice("welt", "die welt", 3)));
}

TEST_CASE("scores match the Dice oracle and ties break by id") {
  test::Rng rng(23);
  const std::string letters = "abcde ";
  auto random_label = [&] {
    std::string s;
    for (std::size_t k = 1 + rng.below(10); k > 0; --k) s += letters[rng.below(letters.size())];
    return s;
  };
  for (int trial = 0; trial < 100; ++trial) {
    std::map<std::string, std::string> labels;
    for (std::size_t i = 0, n = 1 + rng.below(15); i < n; ++i) {
      labels["n" + std::to_string(i)] = random_label();
    }
    const NGramIndex index(labels, 3);
    const auto q = random_label();
    const std::size_t k = 1 + rng.below(20);
    const auto hits = index.query(q, k);

    std::vector<SearchHit> expect;
    for (const auto& [id, label] : labels) {
      const double s = oracle::dice(q, label, 3);
      if (s > 0) expect.push_back({id, s});
    }
    std::sort(expect.begin(), expect.end(), [](const SearchHit& a, const SearchHit& b) {
      return a.score != b.score ? a.score > b.score : a.id < b.id;
    });
    if (expect.size() > k) expect.resize(k);
    REQUIRE(hits.size() == expect.size());
    for (std::size_t i = 0; i < hits.size(); ++i) {
      CHECK(hits[i].score == doctest::Approx(expect[i].score));
      CHECK(hits[i].score > 0.0);
      CHECK(hits[i].score <= 1.0);
    }
    for (std::size_t i = 1; i < hits.size(); ++i) {
      CHECK((hits[i - 1].score > hits[i].score ||
             (hits[i - 1].score == hits[i].score && hits[i - 1].id < hits[i].id)));
    }
  }
}

TEST_CASE("every label finds itself with score 1") {
  std::map<std::string, std::string> labels = {
      {"1", "Die Welt ist alles, was der Fall ist."},
      {"1.1", "Die Welt ist die Gesamtheit der Tatsachen, nicht der Dinge."},
      {"2", "Was der Fall ist, die Tatsache, ist das Bestehen von Sachverhalten."}};
  const NGramIndex index(labels);
  for (const auto& [id, label] : labels) {
    const auto hits = index.query(label, 1);
    REQUIRE(hits.size() == 1);
    CHECK(hits[0].id == id);
    CHECK(hits[0].score == 1.0);
  }
}

TEST_CASE("repeated queries give the same ranking") {
  std::map<std::string, std::string> labels;
  for (int i = 0; i < 50; ++i) labels[std::to_string(i)] = "label " + std::to_string(i % 7);
  const NGramIndex index(labels);
  const auto first = index.query("label 3", 10);
  for (int run = 0; run < 100; ++run) {
    const auto again = index.query("label 3", 10);
    REQUIRE(again.size() == first.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
      CHECK(again[i].id == first[i].id);
      CHECK(again[i].score == first[i].score);
    }
  }
}
