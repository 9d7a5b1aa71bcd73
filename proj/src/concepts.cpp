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

#include "tnet/concepts.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "strings.hpp"
#include "tnet/error.hpp"

namespace tnet {

namespace {

std::string join(const std::vector<std::string>& tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out.push_back(' ');
    out += tokens[i];
  }
  return out;
}

std::vector<std::string> stem_all(const std::vector<std::string>& tokens,
                                  const LangResources& resources) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) out.push_back(stem(t, resources));
  return out;
}

// First stem -> (entry, form) candidates, longest form first.
using MatchIndex =
    std::unordered_map<std::string, std::vector<std::pair<std::size_t, std::size_t>>>;

MatchIndex make_index(const std::vector<ConceptEntry>& entries) {
  MatchIndex index;
  for (std::size_t e = 0; e < entries.size(); ++e) {
    for (std::size_t f = 0; f < entries[e].stemmed_forms.size(); ++f) {
      const auto& form = entries[e].stemmed_forms[f];
      if (!form.empty()) index[form.front()].emplace_back(e, f);
    }
  }
  for (auto& [first, candidates] : index) {
    std::stable_sort(candidates.begin(), candidates.end(), [&](const auto& x, const auto& y) {
      return entries[x.first].stemmed_forms[x.second].size() >
             entries[y.first].stemmed_forms[y.second].size();
    });
  }
  return index;
}

std::vector<Occurrence> match(const std::vector<std::string>& stems,
                              const std::vector<ConceptEntry>& entries,
                              const MatchIndex& index) {
  std::vector<Occurrence> out;
  std::size_t i = 0;
  while (i < stems.size()) {
    const auto it = index.find(stems[i]);
    bool matched = false;
    if (it != index.end()) {
      for (const auto& [e, f] : it->second) {
        const auto& form = entries[e].stemmed_forms[f];
        if (i + form.size() > stems.size()) continue;
        if (!std::equal(form.begin(), form.end(), stems.begin() + static_cast<std::ptrdiff_t>(i))) {
          continue;
        }
        out.push_back({e, i, i + form.size() - 1});
        i += form.size();
        matched = true;
        break;
      }
    }
    if (!matched) ++i;
  }
  return out;
}

// Frequencies and first groups of every entry over the version.
void scan(std::vector<ConceptEntry>& entries, const Version& version,
          const LangResources& resources) {
  for (auto& e : entries) {
    e.frequency = 0;
    e.first_group = 1;
  }
  const auto index = make_index(entries);
  std::vector<bool> seen(entries.size(), false);
  for (const auto& prop : version.propositions()) {
    for (const auto& occ : match(stem_all(tokenize(prop.text), resources), entries, index)) {
      auto& e = entries[occ.concept_index];
      ++e.frequency;
      if (!seen[occ.concept_index]) {
        seen[occ.concept_index] = true;
        e.first_group = prop.group();
      }
    }
  }
}

}  // namespace

void ConceptConfig::validate() const {
  if (min_propositions < 1 || min_frequency < 1) {
    throw DataError("concept thresholds must be >= 1");
  }
}

ConceptLexicon::ConceptLexicon(std::vector<ConceptEntry> entries,
                               std::set<std::string> excluded)
    : entries_(std::move(entries)), excluded_(std::move(excluded)) {}

const ConceptEntry* ConceptLexicon::find(const std::string& id) const {
  for (const auto& e : entries_) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

std::vector<ConceptEntry> read_concept_annotations(std::istream& in,
                                                   const LangResources& resources) {
  std::vector<ConceptEntry> entries;
  std::map<std::string, std::size_t> by_id;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    detail::strip_cr(line);
    if (line_no == 1) detail::strip_bom(line);
    if (!line.empty() && line[0] == '#') continue;
    if (detail::trim(line).empty()) continue;

    std::vector<std::vector<std::string>> forms;
    for (const auto& field : detail::split(line, '\t')) {
      auto tokens = tokenize(field);
      if (tokens.empty()) {
        if (forms.empty()) {
          throw ParseError("line " + std::to_string(line_no) +
                               ": concept form has no word tokens",
                           line_no);
        }
        continue;
      }
      forms.push_back(std::move(tokens));
    }
    const std::string id = join(forms.front());
    auto [it, fresh] = by_id.emplace(id, entries.size());
    if (fresh) entries.push_back(ConceptEntry{id, {}, {}, 1, 0, 1});
    auto& entry = entries[it->second];
    for (auto& form : forms) {
      if (std::find(entry.forms.begin(), entry.forms.end(), form) != entry.forms.end()) continue;
      entry.stemmed_forms.push_back(stem_all(form, resources));
      entry.token_count = std::max(entry.token_count, form.size());
      entry.forms.push_back(std::move(form));
    }
  }
  return entries;
}

std::set<std::string> read_exclusions(std::istream& in) {
  std::set<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    detail::strip_cr(line);
    if (!line.empty() && line[0] == '#') continue;
    auto tokens = tokenize(line);
    if (!tokens.empty()) out.insert(join(tokens));
  }
  return out;
}

std::vector<ConceptEntry> chunk_concepts(const Version& version,
                                         const LangResources& resources) {
  constexpr std::size_t kMaxChunk = 4;
  std::vector<ConceptEntry> entries;
  std::map<std::string, std::size_t> by_id;
  auto emit = [&](std::vector<std::string>& run) {
    for (std::size_t start = 0; start < run.size(); start += kMaxChunk) {
      const std::size_t stop = std::min(run.size(), start + kMaxChunk);
      std::vector<std::string> chunk(run.begin() + static_cast<std::ptrdiff_t>(start),
                                     run.begin() + static_cast<std::ptrdiff_t>(stop));
      const auto id = join(chunk);
      if (by_id.emplace(id, entries.size()).second) {
        auto stemmed = stem_all(chunk, resources);
        const auto n = chunk.size();
        entries.push_back(ConceptEntry{id, {std::move(chunk)}, {std::move(stemmed)}, n, 0, 1});
      }
    }
    run.clear();
  };
  for (const auto& prop : version.propositions()) {
    std::vector<std::string> run;
    for (auto& token : tokenize(prop.text)) {
      if (resources.is_stopword(token)) {
        emit(run);
      } else {
        run.push_back(std::move(token));
      }
    }
    emit(run);
  }
  return entries;
}

ConceptLexicon build_lexicon(std::vector<ConceptEntry> raw, const Version& version,
                             const LangResources& resources, const ConceptConfig& config,
                             const std::set<std::string>& excluded) {
  config.validate();
  std::erase_if(raw, [&](const ConceptEntry& e) { return excluded.count(e.id) > 0; });
  // Dropping an entry can shift later matches, so prune until stable.
  while (true) {
    scan(raw, version, resources);
    const auto before = raw.size();
    std::erase_if(raw, [&](const ConceptEntry& e) { return e.frequency < config.min_frequency; });
    if (raw.size() == before) break;
  }
  return ConceptLexicon(std::move(raw), excluded);
}

ConceptLexicon load_lexicon(std::istream& annotations, const ConceptConfig& config,
                            const Version& version, const LangResources& resources,
                            const std::set<std::string>& excluded) {
  return build_lexicon(read_concept_annotations(annotations, resources), version, resources,
                       config, excluded);
}

std::vector<Occurrence> find_occurrences(const std::vector<std::string>& stemmed_tokens,
                                         const ConceptLexicon& lexicon) {
  return match(stemmed_tokens, lexicon.entries(), make_index(lexicon.entries()));
}

std::vector<Occurrence> find_occurrences(const Proposition& prop,
                                         const ConceptLexicon& lexicon,
                                         const LangResources& resources) {
  return find_occurrences(stem_all(tokenize(prop.text), resources), lexicon);
}

std::size_t span_gap(const Occurrence& a, const Occurrence& b) {
  if (a.end < b.start) return b.start - a.end - 1;
  if (b.end < a.start) return a.start - b.end - 1;
  return 0;
}

ConceptGraph build_concept_network(const Version& version, const ConceptLexicon& lexicon,
                                   const LangResources& resources,
                                   const ConceptConfig& config) {
  config.validate();
  const auto& entries = lexicon.entries();
  const auto index = make_index(entries);

  std::map<std::pair<std::string, std::string>, std::size_t> support;
  for (const auto& prop : version.propositions()) {
    const auto occs = match(stem_all(tokenize(prop.text), resources), entries, index);
    std::set<std::pair<std::string, std::string>> linked;
    for (std::size_t x = 0; x < occs.size(); ++x) {
      for (std::size_t y = x + 1; y < occs.size(); ++y) {
        const auto& a = occs[x];
        const auto& b = occs[y];
        if (a.concept_index == b.concept_index) continue;
        const bool multi = a.length() >= 2 || b.length() >= 2;
        const std::size_t window = multi ? config.multi_window : config.single_window;
        if (span_gap(a, b) > window) continue;
        auto ida = entries[a.concept_index].id;
        auto idb = entries[b.concept_index].id;
        if (idb < ida) std::swap(ida, idb);
        linked.emplace(std::move(ida), std::move(idb));
      }
    }
    for (const auto& pair : linked) ++support[pair];
  }

  ConceptGraph graph;
  graph.version_id = version.id();
  graph.language = version.language();
  graph.translator = version.translator();
  for (const auto& e : entries) graph.nodes.push_back({e.id, e.id, e.first_group, e.frequency});
  std::sort(graph.nodes.begin(), graph.nodes.end(),
            [](const ConceptNode& a, const ConceptNode& b) { return a.id < b.id; });
  for (const auto& [pair, count] : support) {
    if (count >= config.min_propositions) graph.edges.push_back({pair.first, pair.second, count});
  }
  return graph;
}

}  // namespace tnet
