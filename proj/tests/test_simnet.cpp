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

#include <set>
#include <tuple>

#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"
#include "tnet/error.hpp"
#include "tnet/simnet.hpp"

using namespace tnet;

namespace {

TokenBag bag(const std::vector<std::string>& tokens) {
  return TokenBag(PropNumber::parse("1"), "xx", tokens);
}

// Version whose propositions are exactly the given token lists; identity
// resources keep them as they are.
Version version_of(const std::vector<std::vector<std::string>>& texts) {
  std::string src;
  for (std::size_t i = 0; i < texts.size(); ++i) {
    src += std::to_string(1 + i % 7) + "." + std::to_string(100 + i) + "\t";
    for (const auto& t : texts[i]) src += t + " ";
    src += "\n";
  }
  return test::version_from(src, "xx");
}

}  // namespace

TEST_CASE("similarity on hand-evaluated bags") {
  CHECK(similarity(bag({"a", "b"}), bag({"b", "a"})) == 1.0);
  CHECK(similarity(bag({"a"}), bag({"b"})) == 0.0);
  CHECK(similarity_ratio(bag({"a", "b", "c"}), bag({"a", "b", "d", "e"})) == Ratio{1, 2});
  CHECK(similarity_ratio(bag({"a", "a", "b"}), bag({"a", "c"})) == Ratio{1, 3});
  CHECK(similarity(bag({}), bag({})) == 0.0);
  CHECK(similarity(bag({}), bag({"a"})) == 0.0);
}

TEST_CASE("set intersection counts types") {
  const auto a = bag({"a", "a", "b"});
  const auto b = bag({"a", "a", "c"});
  CHECK(similarity_ratio(a, b, Intersection::Multiset) == Ratio{2, 3});
  CHECK(similarity_ratio(a, b, Intersection::Set) == Ratio{1, 2});
}

TEST_CASE("similarity agrees with the oracle on random bags") {
  test::Rng rng(1);
  for (int i = 0; i < 1000; ++i) {
    const auto ta = test::random_tokens(rng, 40, 12);
    const auto tb = test::random_tokens(rng, 40, 12);
    for (const auto mode : {Intersection::Multiset, Intersection::Set}) {
      const auto expect = oracle::similarity(ta, tb, mode == Intersection::Set);
      const auto got = similarity_ratio(bag(ta), bag(tb), mode);
      CHECK(got == Ratio{expect.num, expect.den});
      CHECK(similarity_ratio(bag(tb), bag(ta), mode) == got);
      CHECK(got.value() >= 0.0);
      CHECK(got.value() <= 1.0);
    }
    if (!ta.empty()) CHECK(similarity(bag(ta), bag(ta)) == 1.0);
  }
}

TEST_CASE("threshold parsing is exact") {
  CHECK(Ratio::parse("0.3") == Ratio{3, 10});
  CHECK(Ratio::parse("1") == Ratio{1, 1});
  CHECK(Ratio::parse(".25") == Ratio{1, 4});
  CHECK_THROWS_AS(Ratio::parse("abc"), ParseError);
  CHECK_THROWS_AS(Ratio::parse("0.3x"), ParseError);
  CHECK(Ratio{3, 10} < Ratio{1, 3});
  CHECK_FALSE(Ratio{3, 10} < Ratio{6, 20});
}

TEST_CASE("network keeps only pairs strictly above the threshold") {
  // (1,2) = 1/2, (1,3) = 0, (2,3) = 1/5
  const auto v = version_of({{"a", "b"}, {"a", "c"}, {"c", "d", "e", "f", "g"}});
  const NetworkConfig config;
  const auto g = build_network(v, test::identity_resources(), config);
  CHECK(g.nodes.size() == 3);
  REQUIRE(g.edges.size() == 1);
  CHECK(g.edges[0].score == Ratio{1, 2});

  const auto v2 = version_of({{"a", "b"}, {"a", "c"}, {"c", "x", "y"}});
  // (1,2) = 1/2, (1,3) = 0, (2,3) = 1/3 > 0.3
  const auto g2 = build_network(v2, test::identity_resources(), config);
  CHECK(g2.edges.size() == 2);

  NetworkConfig strict;
  strict.threshold = Ratio{1, 1};
  const auto same = version_of({{"a"}, {"a"}});
  CHECK(build_network(same, test::identity_resources(), strict).edges.empty());

  const auto single = version_of({{"a"}});
  const auto g1 = build_network(single, test::identity_resources(), config);
  CHECK(g1.nodes.size() == 1);
  CHECK(g1.edges.empty());
}

TEST_CASE("score exactly at the threshold is not an edge") {
  // 3/10 exactly: 3 shared of 10.
  const auto v = version_of({{"a", "b", "c", "d", "e", "f", "g", "h", "i", "j"},
                             {"a", "b", "c", "x1", "x2", "x3", "x4", "x5", "x6", "x7"}});
  CHECK(build_network(v, test::identity_resources(), NetworkConfig{}).edges.empty());
}

TEST_CASE("network matches the brute-force oracle on random versions") {
  test::Rng rng(2);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<std::vector<std::string>> texts(2 + rng.below(30));
    for (auto& t : texts) {
      t = test::random_tokens(rng, 8, 10);
      if (t.empty()) t.push_back("w0");
    }
    NetworkConfig config;
    config.threshold = Ratio{rng.below(9) + 1, 10};
    config.intersection = rng.coin() ? Intersection::Set : Intersection::Multiset;
    const auto v = version_of(texts);
    const auto g = build_network(v, test::identity_resources(), config);

    const auto expect = oracle::network(texts, config.threshold.num, config.threshold.den,
                                        config.intersection == Intersection::Set);
    std::set<std::pair<std::size_t, std::size_t>> got;
    for (const auto& e : g.edges) {
      CHECK(e.a < e.b);
      CHECK(e.score > config.threshold);
      std::size_t ia = 0, ib = 0;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (v.propositions()[i].number == e.a) ia = i;
        if (v.propositions()[i].number == e.b) ib = i;
      }
      got.emplace(std::min(ia, ib), std::max(ia, ib));
    }
    CHECK(got == expect);
    for (std::size_t i = 1; i < g.edges.size(); ++i) {
      CHECK(std::tie(g.edges[i - 1].a, g.edges[i - 1].b) < std::tie(g.edges[i].a, g.edges[i].b));
    }
  }
}

TEST_CASE("edge lengths and colors follow the style config") {
  const NetworkConfig config;
  CHECK(edge_length(1.0, config) == 20);
  CHECK(edge_length(0.3, config) == 146);
  CHECK(edge_length(0.0, config) == 200);

  const auto v = test::version_from("1\ta b\n1.1\ta b\n2\ta c\n7\tz\n", "xx");
  const auto styled = style(build_network(v, test::identity_resources(), config), config);
  REQUIRE(styled.nodes.size() == 4);
  CHECK(styled.nodes[0].color == styled.nodes[1].color);
  CHECK(styled.nodes[0].color == "#E69F00");
  CHECK(styled.nodes[2].color == "#56B4E9");
  CHECK(styled.nodes[3].color == "#CC79A7");
  for (const auto& e : styled.edges) CHECK(e.length == edge_length(e.score.value(), config));
}

TEST_CASE("config validation") {
  NetworkConfig c;
  CHECK_NOTHROW(c.validate());
  c.threshold = Ratio{11, 10};
  CHECK_THROWS_AS(c.validate(), DataError);
  c = NetworkConfig{};
  c.edge_length_base = -1;
  CHECK_THROWS_AS(c.validate(), DataError);
}

namespace {

SimilarityGraph graph(const std::vector<std::string>& nodes,
                      const std::vector<std::pair<std::string, std::string>>& edges) {
  SimilarityGraph g;
  for (const auto& n : nodes) {
    const auto num = PropNumber::parse(n);
    g.nodes.push_back({num, n, num.group()});
  }
  for (const auto& [a, b] : edges) g.edges.push_back({PropNumber::parse(a), PropNumber::parse(b), {1, 2}});
  return g;
}

}  // namespace

TEST_CASE("topology comparison") {
  const auto g = graph({"1", "1.1", "2"}, {{"1", "1.1"}, {"1.1", "2"}});
  const auto self = compare(g, g);
  CHECK(self.node_jaccard == 1.0);
  CHECK(self.edge_jaccard == 1.0);
  CHECK(self.nodes_only_in_1.empty());
  CHECK(self.nodes_only_in_2.empty());

  const auto r = compare(graph({"1", "2"}, {}), graph({"2", "3"}, {}));
  CHECK(r.node_jaccard == doctest::Approx(1.0 / 3.0));
  CHECK(r.edge_jaccard == 1.0);
  REQUIRE(r.nodes_only_in_1.size() == 1);
  CHECK(r.nodes_only_in_1[0].str() == "1");

  const auto d = compare(graph({"1", "1.1"}, {{"1", "1.1"}}), graph({"2", "2.1"}, {{"2", "2.1"}}));
  CHECK(d.node_jaccard == 0.0);
  CHECK(d.edge_jaccard == 0.0);
  CHECK(d.nodes_only_in_1.size() == 2);
  CHECK(d.nodes_only_in_2.size() == 2);
}

TEST_CASE("group compactness") {
  const auto g = graph({"1", "1.1", "1.2", "2", "2.1", "2.2", "2.3", "3", "3.1"},
                       {{"1", "1.1"}, {"1", "1.2"}, {"1.1", "1.2"},
                        {"2", "2.1"}, {"2", "2.2"}, {"2.1", "2.3"}, {"1", "2"}});
  const auto c = group_compactness(g);
  // All seven groups are reported; empty and singleton groups have density 0.
  REQUIRE(c.size() == 7);
  CHECK(c[0].group == 1);
  CHECK(c[0].density == 1.0);
  CHECK(c[1].group == 2);
  CHECK(c[1].intra_edges == 3);
  CHECK(c[1].nodes == 4);
  CHECK(c[1].density == 0.5);
  for (std::size_t i = 2; i < 7; ++i) {
    CHECK(c[i].group == static_cast<int>(i + 1));
    CHECK(c[i].density == 0.0);
  }
}
