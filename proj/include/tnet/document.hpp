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

// Graph documents: the JSON interchange format consumed by the explorer.
//
//   {
//     "schema_version": "1",
//     "meta":  {"kind": "propositions"|"concepts", "language", "translator",
//               "config": {...}},
//     "nodes": [{"id", "label", "group", "color"}],
//     "edges": [{"from", "to", "value", "length", "weight"?}]
//   }
//
// Serialization is canonical: object keys sorted, nodes sorted by id, edges
// by (from, to), two-space indent, trailing newline.

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "tnet/concepts.hpp"
#include "tnet/simnet.hpp"

namespace tnet {

inline constexpr std::string_view kSchemaVersion = "1";

struct DocNode {
  std::string id;
  std::string label;
  int group = 1;
  std::string color;
};

struct DocEdge {
  std::string from;
  std::string to;
  double value = 0.0;
  int length = 0;
  std::optional<long long> weight;
};

struct GraphDocument {
  std::string kind;  // "propositions" or "concepts"
  std::string language;
  std::string translator;
  nlohmann::json config = nlohmann::json::object();
  std::vector<DocNode> nodes;
  std::vector<DocEdge> edges;
};

GraphDocument to_document(const StyledGraph& graph);

// Concept edges carry their support count as weight; value is the weight
// relative to the heaviest edge and length follows from value.
GraphDocument to_document(const ConceptGraph& graph, const ConceptConfig& concept_config,
                          const NetworkConfig& style_config);

nlohmann::json to_json(const GraphDocument& doc);

// Schema problems, empty when the document is valid.
std::vector<std::string> validate_document(const nlohmann::json& doc);

// Throws DataError listing the schema problems.
GraphDocument from_json(const nlohmann::json& doc);

std::string export_document(const GraphDocument& doc);
GraphDocument parse_document(std::string_view text);

// Proposition documents back to a graph for topology comparison.
SimilarityGraph graph_from_document(const GraphDocument& doc);

// Lowercase ASCII slug: alphanumerics kept, runs of anything else become '-'.
std::string slugify(std::string_view text);

// "<kind>-<slug of version id>".
std::string document_id(std::string_view kind, std::string_view version_id);

struct BundleEntry {
  std::string id;
  std::string file;  // relative to the bundle directory
  GraphDocument document;
};

// Writes `<dir>/<id>.json` and upserts the entry into `<dir>/index.json`.
void write_to_bundle(const std::filesystem::path& dir, const std::string& id,
                     const GraphDocument& doc);

// Loads and validates every document listed in `<dir>/index.json`. Throws
// DataError naming the offending file on any failure.
std::vector<BundleEntry> load_bundle(const std::filesystem::path& dir);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace tnet
