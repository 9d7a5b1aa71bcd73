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

// Proposition similarity networks.
//
// Two propositions are compared on their normalized token bags:
//
//   similarity(p1, p2) = |p1 ∩ p2| / max(|p1|, |p2|)
//
// with multiset intersection by default. Scores are kept as exact rationals
// so that the strict threshold test is not subject to rounding.

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "tnet/corpus.hpp"
#include "tnet/textproc.hpp"

namespace tnet {

// Non-negative rational with a positive denominator; not reduced.
struct Ratio {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }

  // Parses a decimal literal such as "0.3" or "1" exactly.
  static Ratio parse(std::string_view text);

  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
    const auto lhs = static_cast<unsigned __int128>(a.num) * b.den;
    const auto rhs = static_cast<unsigned __int128>(b.num) * a.den;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  friend bool operator==(const Ratio& a, const Ratio& b) {
    return (a <=> b) == 0;
  }
};

enum class Intersection { Multiset, Set };

using Palette = std::array<std::string, 7>;

// Okabe-Ito colors, one per group 1..7.
Palette default_palette();

struct NetworkConfig {
  Ratio threshold{3, 10};
  int edge_length_base = 20;
  int edge_length_span = 180;
  Palette palette = default_palette();
  Intersection intersection = Intersection::Multiset;

  // Throws DataError when threshold is outside [0, 1].
  void validate() const;
};

Ratio similarity_ratio(const TokenBag& a, const TokenBag& b,
                       Intersection mode = Intersection::Multiset);
double similarity(const TokenBag& a, const TokenBag& b,
                  Intersection mode = Intersection::Multiset);

struct SimNode {
  PropNumber number;
  std::string label;
  int group = 1;
};

struct SimEdge {
  PropNumber a;  // a < b
  PropNumber b;
  Ratio score;
};

struct SimilarityGraph {
  std::string version_id;
  std::string language;
  std::string translator;
  std::vector<SimNode> nodes;  // sorted by number
  std::vector<SimEdge> edges;  // sorted by (a, b)
};

std::vector<TokenBag> normalize_version(const Version& version,
                                        const LangResources& resources);

SimilarityGraph build_network(const Version& version,
                              const LangResources& resources,
                              const NetworkConfig& config);

// Same as above on precomputed bags (one per version proposition, in order).
SimilarityGraph build_network(const Version& version,
                              const std::vector<TokenBag>& bags,
                              const NetworkConfig& config);

struct StyledNode {
  PropNumber number;
  std::string label;
  int group = 1;
  std::string color;
};

struct StyledEdge {
  PropNumber a;
  PropNumber b;
  Ratio score;
  int length = 0;
};

struct StyledGraph {
  std::string version_id;
  std::string language;
  std::string translator;
  NetworkConfig config;
  std::vector<StyledNode> nodes;
  std::vector<StyledEdge> edges;
};

// length = round(base + span * (1 - score)); higher similarity, shorter edge.
int edge_length(double score, const NetworkConfig& config);

StyledGraph style(const SimilarityGraph& graph, const NetworkConfig& config);

struct TopologyReport {
  double node_jaccard = 0.0;
  double edge_jaccard = 0.0;
  std::vector<PropNumber> nodes_only_in_1;
  std::vector<PropNumber> nodes_only_in_2;
};

// Graphs are matched by proposition number, not by text. Jaccard of two
// empty sets is taken as 1.
TopologyReport compare(const SimilarityGraph& g1, const SimilarityGraph& g2);

struct GroupDensity {
  int group = 1;
  std::size_t nodes = 0;
  std::size_t intra_edges = 0;
  double density = 0.0;
};

// Intra-group edge density for groups 1..7, densest first, ties by group.
std::vector<GroupDensity> group_compactness(const SimilarityGraph& graph);

}  // namespace tnet
