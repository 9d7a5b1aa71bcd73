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

// Concept co-occurrence networks.
//
// A concept is one or more surface forms (token sequences). Occurrences are
// matched on stemmed tokens, longest match first. Two concepts are linked
// when they occur close together in at least `min_propositions`
// propositions; "close" is a gap of at most `single_window` tokens, or
// `multi_window` tokens when either matched span has two or more tokens.

#pragma once

#include <cstddef>
#include <istream>
#include <set>
#include <string>
#include <vector>

#include "tnet/corpus.hpp"
#include "tnet/simnet.hpp"
#include "tnet/textproc.hpp"

namespace tnet {

struct ConceptConfig {
  std::size_t single_window = 3;
  std::size_t multi_window = 10;
  std::size_t min_propositions = 2;
  std::size_t min_frequency = 2;

  void validate() const;
};

struct ConceptEntry {
  std::string id;                               // first form, tokens joined by ' '
  std::vector<std::vector<std::string>> forms;  // surface token sequences
  std::vector<std::vector<std::string>> stemmed_forms;
  std::size_t token_count = 1;  // longest form
  std::size_t frequency = 0;
  int first_group = 1;
};

class ConceptLexicon {
 public:
  ConceptLexicon() = default;
  ConceptLexicon(std::vector<ConceptEntry> entries, std::set<std::string> excluded);

  const std::vector<ConceptEntry>& entries() const { return entries_; }
  const std::set<std::string>& excluded() const { return excluded_; }
  const ConceptEntry* find(const std::string& id) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::vector<ConceptEntry> entries_;
  std::set<std::string> excluded_;
};

// Raw annotation entries: one concept per line, forms separated by TAB.
// Forms are tokenized and stemmed with the given resources. Throws
// ParseError (with line number) on a line whose first form has no tokens.
std::vector<ConceptEntry> read_concept_annotations(std::istream& in,
                                                   const LangResources& resources);

// Exclusion list: one concept per line; normalized the same way as ids.
std::set<std::string> read_exclusions(std::istream& in);

// Maximal runs of non-stopword tokens, split into pieces of at most four
// tokens; one entry per distinct piece, in first-occurrence order.
std::vector<ConceptEntry> chunk_concepts(const Version& version,
                                         const LangResources& resources);

// Scans the version for frequencies and first groups, then drops entries
// below min_frequency and those on the exclusion list.
ConceptLexicon build_lexicon(std::vector<ConceptEntry> raw, const Version& version,
                             const LangResources& resources, const ConceptConfig& config,
                             const std::set<std::string>& excluded = {});

ConceptLexicon load_lexicon(std::istream& annotations, const ConceptConfig& config,
                            const Version& version, const LangResources& resources,
                            const std::set<std::string>& excluded = {});

struct Occurrence {
  std::size_t concept_index;  // index into lexicon entries
  std::size_t start;          // token indices, inclusive
  std::size_t end;

  std::size_t length() const { return end - start + 1; }
};

// Longest-match, left-to-right, non-overlapping spans over the tokenized
// (not stopword-stripped) proposition.
std::vector<Occurrence> find_occurrences(const Proposition& prop,
                                         const ConceptLexicon& lexicon,
                                         const LangResources& resources);
std::vector<Occurrence> find_occurrences(const std::vector<std::string>& stemmed_tokens,
                                         const ConceptLexicon& lexicon);

// Tokens strictly between two non-overlapping spans.
std::size_t span_gap(const Occurrence& a, const Occurrence& b);

struct ConceptNode {
  std::string id;
  std::string label;
  int group = 1;
  std::size_t frequency = 0;
};

struct ConceptEdge {
  std::string a;  // a < b
  std::string b;
  std::size_t weight = 0;
};

struct ConceptGraph {
  std::string version_id;
  std::string language;
  std::string translator;
  std::vector<ConceptNode> nodes;  // sorted by id
  std::vector<ConceptEdge> edges;  // sorted by (a, b)
};

ConceptGraph build_concept_network(const Version& version, const ConceptLexicon& lexicon,
                                   const LangResources& resources,
                                   const ConceptConfig& config);

}  // namespace tnet
