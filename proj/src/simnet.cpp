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

#include "tnet/simnet.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "tnet/error.hpp"

namespace tnet {

Ratio Ratio::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty number", 0);
  std::uint64_t num = 0;
  std::uint64_t den = 1;
  bool seen_dot = false;
  bool seen_digit = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '.' && !seen_dot) {
      seen_dot = true;
      continue;
    }
    if (c < '0' || c > '9') {
      throw ParseError("invalid number '" + std::string(text) + "' at position " +
                           std::to_string(i),
                       i);
    }
    if (num > 100000000000000ULL || den > 100000000000000ULL) {
      throw ParseError("number '" + std::string(text) + "' has too many digits", i);
    }
    seen_digit = true;
    num = num * 10 + static_cast<std::uint64_t>(c - '0');
    if (seen_dot) den *= 10;
  }
  if (!seen_digit) throw ParseError("invalid number '" + std::string(text) + "'", 0);
  return Ratio{num, den};
}

Palette default_palette() {
  return {"#E69F00", "#56B4E9", "#009E73", "#F0E442",
          "#0072B2", "#D55E00", "#CC79A7"};
}

void NetworkConfig::validate() const {
  if (threshold > Ratio{1, 1}) {
    throw DataError("threshold must lie in [0, 1]");
  }
  if (edge_length_base < 0 || edge_length_span < 0) {
    throw DataError("edge length constants must be non-negative");
  }
}

Ratio similarity_ratio(const TokenBag& a, const TokenBag& b, Intersection mode) {
  const bool as_set = mode == Intersection::Set;
  const std::size_t size_a = as_set ? a.distinct() : a.size();
  const std::size_t size_b = as_set ? b.distinct() : b.size();
  const std::size_t longest = std::max(size_a, size_b);
  if (longest == 0) return Ratio{0, 1};

  std::size_t common = 0;
  auto ia = a.counts().begin();
  auto ib = b.counts().begin();
  while (ia != a.counts().end() && ib != b.counts().end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      common += as_set ? 1 : std::min(ia->second, ib->second);
      ++ia;
      ++ib;
    }
  }
  return Ratio{common, longest};
}

double similarity(const TokenBag& a, const TokenBag& b, Intersection mode) {
  return similarity_ratio(a, b, mode).value();
}

std::vector<TokenBag> normalize_version(const Version& version,
                                        const LangResources& resources) {
  std::vector<TokenBag> bags;
  bags.reserve(version.size());
  for (const auto& prop : version.propositions()) {
    bags.push_back(normalize(prop, resources));
  }
  return bags;
}

SimilarityGraph build_network(const Version& version,
                              const LangResources& resources,
                              const NetworkConfig& config) {
  return build_network(version, normalize_version(version, resources), config);
}

SimilarityGraph build_network(const Version& version,
                              const std::vector<TokenBag>& bags,
                              const NetworkConfig& config) {
  config.validate();
  if (bags.size() != version.size()) {
    throw DataError("token bag count does not match the version");
  }
  SimilarityGraph graph;
  graph.version_id = version.id();
  graph.language = version.language();
  graph.translator = version.translator();

  // Work in outline order so edges come out canonically sorted.
  std::vector<std::size_t> order(version.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  const auto& props = version.propositions();
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return props[x].number < props[y].number;
  });

  graph.nodes.reserve(order.size());
  for (std::size_t i : order) {
    graph.nodes.push_back({props[i].number, props[i].text, props[i].group()});
  }
  for (std::size_t x = 0; x < order.size(); ++x) {
    const auto& bx = bags[order[x]];
    for (std::size_t y = x + 1; y < order.size(); ++y) {
      const Ratio score = similarity_ratio(bx, bags[order[y]], config.intersection);
      if (score > config.threshold) {
        graph.edges.push_back({props[order[x]].number, props[order[y]].number, score});
      }
    }
  }
  return graph;
}

int edge_length(double score, const NetworkConfig& config) {
  return static_cast<int>(std::lround(config.edge_length_base +
                                      config.edge_length_span * (1.0 - score)));
}

StyledGraph style(const SimilarityGraph& graph, const NetworkConfig& config) {
  StyledGraph out;
  out.version_id = graph.version_id;
  out.language = graph.language;
  out.translator = graph.translator;
  out.config = config;
  out.nodes.reserve(graph.nodes.size());
  for (const auto& n : graph.nodes) {
    out.nodes.push_back(
        {n.number, n.label, n.group, config.palette.at(static_cast<std::size_t>(n.group - 1))});
  }
  out.edges.reserve(graph.edges.size());
  for (const auto& e : graph.edges) {
    out.edges.push_back({e.a, e.b, e.score, edge_length(e.score.value(), config)});
  }
  return out;
}

namespace {

template <typename T>
double jaccard(const std::set<T>& x, const std::set<T>& y) {
  if (x.empty() && y.empty()) return 1.0;
  std::size_t common = 0;
  for (const auto& v : x) common += y.count(v);
  return static_cast<double>(common) /
         static_cast<double>(x.size() + y.size() - common);
}

}  // namespace

TopologyReport compare(const SimilarityGraph& g1, const SimilarityGraph& g2) {
  std::set<PropNumber> n1, n2;
  for (const auto& n : g1.nodes) n1.insert(n.number);
  for (const auto& n : g2.nodes) n2.insert(n.number);
  std::set<std::pair<PropNumber, PropNumber>> e1, e2;
  for (const auto& e : g1.edges) e1.emplace(e.a, e.b);
  for (const auto& e : g2.edges) e2.emplace(e.a, e.b);

  TopologyReport report;
  report.node_jaccard = jaccard(n1, n2);
  report.edge_jaccard = jaccard(e1, e2);
  std::set_difference(n1.begin(), n1.end(), n2.begin(), n2.end(),
                      std::back_inserter(report.nodes_only_in_1));
  std::set_difference(n2.begin(), n2.end(), n1.begin(), n1.end(),
                      std::back_inserter(report.nodes_only_in_2));
  return report;
}

std::vector<GroupDensity> group_compactness(const SimilarityGraph& graph) {
  std::vector<GroupDensity> out(7);
  for (int g = 1; g <= 7; ++g) out[static_cast<std::size_t>(g - 1)].group = g;
  std::map<PropNumber, int> group_of;
  for (const auto& n : graph.nodes) {
    group_of[n.number] = n.group;
    ++out.at(static_cast<std::size_t>(n.group - 1)).nodes;
  }
  for (const auto& e : graph.edges) {
    const int ga = group_of.at(e.a);
    if (ga == group_of.at(e.b)) ++out[static_cast<std::size_t>(ga - 1)].intra_edges;
  }
  for (auto& d : out) {
    if (d.nodes >= 2) {
      const double pairs = static_cast<double>(d.nodes) * static_cast<double>(d.nodes - 1) / 2.0;
      d.density = static_cast<double>(d.intra_edges) / pairs;
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const GroupDensity& a, const GroupDensity& b) {
    if (a.density != b.density) return a.density > b.density;
    return a.group < b.group;
  });
  return out;
}

}  // namespace tnet
