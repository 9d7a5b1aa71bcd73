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

#include "tnet/document.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "tnet/error.hpp"

namespace tnet {

using nlohmann::json;

namespace {

void sort_canonical(GraphDocument& doc) {
  std::sort(doc.nodes.begin(), doc.nodes.end(),
            [](const DocNode& a, const DocNode& b) { return a.id < b.id; });
  std::sort(doc.edges.begin(), doc.edges.end(), [](const DocEdge& a, const DocEdge& b) {
    if (a.from != b.from) return a.from < b.from;
    return a.to < b.to;
  });
}

json palette_json(const Palette& palette) {
  json out = json::array();
  for (const auto& c : palette) out.push_back(c);
  return out;
}

json style_config_json(const NetworkConfig& config) {
  return {{"edge_length_base", config.edge_length_base},
          {"edge_length_span", config.edge_length_span},
          {"palette", palette_json(config.palette)}};
}

}  // namespace

GraphDocument to_document(const StyledGraph& graph) {
  GraphDocument doc;
  doc.kind = "propositions";
  doc.language = graph.language;
  doc.translator = graph.translator;
  doc.config = style_config_json(graph.config);
  doc.config["threshold"] = graph.config.threshold.value();
  doc.config["intersection"] =
      graph.config.intersection == Intersection::Set ? "set" : "multiset";
  for (const auto& n : graph.nodes) doc.nodes.push_back({n.number.str(), n.label, n.group, n.color});
  for (const auto& e : graph.edges) {
    doc.edges.push_back({e.a.str(), e.b.str(), e.score.value(), e.length, std::nullopt});
  }
  sort_canonical(doc);
  return doc;
}

GraphDocument to_document(const ConceptGraph& graph, const ConceptConfig& concept_config,
                          const NetworkConfig& style_config) {
  GraphDocument doc;
  doc.kind = "concepts";
  doc.language = graph.language;
  doc.translator = graph.translator;
  doc.config = style_config_json(style_config);
  doc.config["single_window"] = concept_config.single_window;
  doc.config["multi_window"] = concept_config.multi_window;
  doc.config["min_propositions"] = concept_config.min_propositions;
  doc.config["min_frequency"] = concept_config.min_frequency;
  for (const auto& n : graph.nodes) {
    doc.nodes.push_back({n.id, n.label, n.group,
                         style_config.palette.at(static_cast<std::size_t>(n.group - 1))});
  }
  std::size_t heaviest = 0;
  for (const auto& e : graph.edges) heaviest = std::max(heaviest, e.weight);
  for (const auto& e : graph.edges) {
    const double value = static_cast<double>(e.weight) / static_cast<double>(heaviest);
    doc.edges.push_back({e.a, e.b, value, edge_length(value, style_config),
                         static_cast<long long>(e.weight)});
  }
  sort_canonical(doc);
  return doc;
}

json to_json(const GraphDocument& doc) {
  json nodes = json::array();
  for (const auto& n : doc.nodes) {
    nodes.push_back({{"id", n.id}, {"label", n.label}, {"group", n.group}, {"color", n.color}});
  }
  json edges = json::array();
  for (const auto& e : doc.edges) {
    json edge = {{"from", e.from}, {"to", e.to}, {"value", e.value}, {"length", e.length}};
    if (e.weight) edge["weight"] = *e.weight;
    edges.push_back(std::move(edge));
  }
  return {{"schema_version", kSchemaVersion},
          {"meta",
           {{"kind", doc.kind},
            {"language", doc.language},
            {"translator", doc.translator},
            {"config", doc.config}}},
          {"nodes", std::move(nodes)},
          {"edges", std::move(edges)}};
}

std::vector<std::string> validate_document(const json& doc) {
  std::vector<std::string> problems;
  auto fail = [&](std::string msg) { problems.push_back(std::move(msg)); };
  if (!doc.is_object()) {
    fail("document is not a JSON object");
    return problems;
  }
  if (!doc.contains("schema_version") || doc["schema_version"] != kSchemaVersion) {
    fail("schema_version must be \"1\"");
  }
  std::string kind;
  if (!doc.contains("meta") || !doc["meta"].is_object()) {
    fail("meta must be an object");
  } else {
    const auto& meta = doc["meta"];
    if (!meta.contains("kind") || !meta["kind"].is_string() ||
        (meta["kind"] != "propositions" && meta["kind"] != "concepts")) {
      fail("meta.kind must be \"propositions\" or \"concepts\"");
    } else {
      kind = meta["kind"].get<std::string>();
    }
    for (const char* key : {"language", "translator"}) {
      if (!meta.contains(key) || !meta[key].is_string()) {
        fail(std::string("meta.") + key + " must be a string");
      }
    }
    if (!meta.contains("config") || !meta["config"].is_object()) {
      fail("meta.config must be an object");
    }
  }

  std::set<std::string> ids;
  if (!doc.contains("nodes") || !doc["nodes"].is_array()) {
    fail("nodes must be an array");
  } else {
    for (std::size_t i = 0; i < doc["nodes"].size(); ++i) {
      const auto& n = doc["nodes"][i];
      const std::string where = "nodes[" + std::to_string(i) + "]";
      if (!n.is_object()) {
        fail(where + " is not an object");
        continue;
      }
      if (!n.contains("id") || !n["id"].is_string()) {
        fail(where + ".id must be a string");
      } else if (!ids.insert(n["id"].get<std::string>()).second) {
        fail(where + ".id '" + n["id"].get<std::string>() + "' is not unique");
      }
      if (!n.contains("label") || !n["label"].is_string()) fail(where + ".label must be a string");
      if (!n.contains("color") || !n["color"].is_string()) fail(where + ".color must be a string");
      if (!n.contains("group") || !n["group"].is_number_integer() || n["group"].get<int>() < 1 ||
          n["group"].get<int>() > 7) {
        fail(where + ".group must be an integer in 1..7");
      }
    }
  }

  if (!doc.contains("edges") || !doc["edges"].is_array()) {
    fail("edges must be an array");
  } else {
    for (std::size_t i = 0; i < doc["edges"].size(); ++i) {
      const auto& e = doc["edges"][i];
      const std::string where = "edges[" + std::to_string(i) + "]";
      if (!e.is_object()) {
        fail(where + " is not an object");
        continue;
      }
      for (const char* key : {"from", "to"}) {
        if (!e.contains(key) || !e[key].is_string()) {
          fail(where + "." + key + " must be a string");
        } else if (!ids.count(e[key].get<std::string>())) {
          fail(where + "." + key + " references unknown node '" + e[key].get<std::string>() + "'");
        }
      }
      if (!e.contains("value") || !e["value"].is_number()) {
        fail(where + ".value must be a number");
      } else if (kind == "propositions") {
        const double v = e["value"].get<double>();
        if (!(v > 0.0 && v <= 1.0)) fail(where + ".value must lie in (0, 1]");
      }
      if (!e.contains("length") || !e["length"].is_number_integer() || e["length"].get<long long>() < 0) {
        fail(where + ".length must be a non-negative integer");
      }
      if (e.contains("weight") && (!e["weight"].is_number_integer() || e["weight"].get<long long>() < 1)) {
        fail(where + ".weight must be a positive integer");
      }
    }
  }
  return problems;
}

GraphDocument from_json(const json& doc) {
  const auto problems = validate_document(doc);
  if (!problems.empty()) {
    std::string msg = "invalid graph document:";
    for (const auto& p : problems) msg += "\n  " + p;
    throw DataError(msg);
  }
  GraphDocument out;
  const auto& meta = doc["meta"];
  out.kind = meta["kind"].get<std::string>();
  out.language = meta["language"].get<std::string>();
  out.translator = meta["translator"].get<std::string>();
  out.config = meta["config"];
  for (const auto& n : doc["nodes"]) {
    out.nodes.push_back({n["id"].get<std::string>(), n["label"].get<std::string>(),
                         n["group"].get<int>(), n["color"].get<std::string>()});
  }
  for (const auto& e : doc["edges"]) {
    DocEdge edge{e["from"].get<std::string>(), e["to"].get<std::string>(),
                 e["value"].get<double>(), e["length"].get<int>(), std::nullopt};
    if (e.contains("weight")) edge.weight = e["weight"].get<long long>();
    out.edges.push_back(std::move(edge));
  }
  sort_canonical(out);
  return out;
}

std::string export_document(const GraphDocument& doc) {
  GraphDocument sorted = doc;
  sort_canonical(sorted);
  return to_json(sorted).dump(2) + "\n";
}

GraphDocument parse_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DataError(std::string("graph document is not valid JSON: ") + e.what());
  }
  return from_json(doc);
}

SimilarityGraph graph_from_document(const GraphDocument& doc) {
  if (doc.kind != "propositions") throw DataError("expected a propositions document");
  SimilarityGraph g;
  g.language = doc.language;
  g.translator = doc.translator;
  g.version_id = doc.translator.empty() ? doc.language : doc.language + ":" + doc.translator;
  for (const auto& n : doc.nodes) g.nodes.push_back({PropNumber::parse(n.id), n.label, n.group});
  for (const auto& e : doc.edges) {
    auto a = PropNumber::parse(e.from);
    auto b = PropNumber::parse(e.to);
    if (b < a) std::swap(a, b);
    // Scores are not needed for topology; keep a rational approximation.
    const auto num = static_cast<std::uint64_t>(std::llround(e.value * 1e9));
    g.edges.push_back({a, b, Ratio{num, 1000000000ULL}});
  }
  std::sort(g.nodes.begin(), g.nodes.end(),
            [](const SimNode& x, const SimNode& y) { return x.number < y.number; });
  std::sort(g.edges.begin(), g.edges.end(), [](const SimEdge& x, const SimEdge& y) {
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
  });
  return g;
}

std::string slugify(std::string_view text) {
  std::string out;
  bool dash = false;
  for (char c : text) {
    const auto u = static_cast<unsigned char>(c);
    if (std::isalnum(u) && u < 0x80) {
      if (dash && !out.empty()) out.push_back('-');
      dash = false;
      out.push_back(static_cast<char>(std::tolower(u)));
    } else {
      dash = true;
    }
  }
  return out;
}

std::string document_id(std::string_view kind, std::string_view version_id) {
  return std::string(kind) + "-" + slugify(version_id);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write " + path.string());
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw DataError("failed writing " + path.string());
}

void write_to_bundle(const std::filesystem::path& dir, const std::string& id,
                     const GraphDocument& doc) {
  const std::string file = id + ".json";
  write_file(dir / file, export_document(doc));

  const auto index_path = dir / "index.json";
  json index = {{"schema_version", kSchemaVersion}, {"networks", json::array()}};
  if (std::filesystem::exists(index_path)) {
    try {
      index = json::parse(read_file(index_path));
    } catch (const json::parse_error& e) {
      throw DataError(index_path.string() + ": " + e.what());
    }
  }
  json networks = json::array();
  for (const auto& entry : index.value("networks", json::array())) {
    if (entry.value("id", "") != id) networks.push_back(entry);
  }
  networks.push_back({{"id", id},
                      {"file", file},
                      {"kind", doc.kind},
                      {"language", doc.language},
                      {"translator", doc.translator}});
  std::sort(networks.begin(), networks.end(), [](const json& a, const json& b) {
    return a.value("id", "") < b.value("id", "");
  });
  index["networks"] = std::move(networks);
  index["schema_version"] = kSchemaVersion;
  write_file(index_path, index.dump(2) + "\n");
}

std::vector<BundleEntry> load_bundle(const std::filesystem::path& dir) {
  const auto index_path = dir / "index.json";
  json index;
  try {
    index = json::parse(read_file(index_path));
  } catch (const json::parse_error& e) {
    throw DataError(index_path.string() + ": " + e.what());
  }
  if (!index.contains("networks") || !index["networks"].is_array()) {
    throw DataError(index_path.string() + ": missing networks array");
  }
  std::vector<BundleEntry> out;
  std::set<std::string> seen;
  for (const auto& entry : index["networks"]) {
    if (!entry.contains("id") || !entry["id"].is_string() || !entry.contains("file") ||
        !entry["file"].is_string()) {
      throw DataError(index_path.string() + ": network entries need string id and file");
    }
    const auto id = entry["id"].get<std::string>();
    if (!seen.insert(id).second) throw DataError(index_path.string() + ": duplicate id " + id);
    const auto file = entry["file"].get<std::string>();
    try {
      out.push_back({id, file, parse_document(read_file(dir / file))});
    } catch (const DataError& e) {
      throw DataError((dir / file).string() + ": " + e.what());
    }
  }
  if (out.empty()) throw DataError(index_path.string() + ": bundle has no documents");
  return out;
}

}  // namespace tnet
