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

// Numbered proposition texts: outline numbers, language versions, and the
// number-keyed alignment across versions.

#pragma once

#include <compare>
#include <cstddef>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tnet {

// A decimal outline number such as "2.0212". The leading digit (1..7) is the
// group; every digit after the dot is one level of subdivision.
class PropNumber {
 public:
  // Throws ParseError with the offending character position.
  static PropNumber parse(std::string_view text);

  int major() const { return major_; }
  int group() const { return major_; }
  // Digits after the dot, e.g. "0212".
  const std::string& decimals() const { return decimals_; }
  std::size_t depth() const { return decimals_.size(); }
  std::string str() const;

  // Drop the last decimal digit; nullopt for a root-level number.
  std::optional<PropNumber> parent() const;

  // Outline order, which is also document order for a well-formed text.
  friend std::strong_ordering operator<=>(const PropNumber& a,
                                          const PropNumber& b);
  friend bool operator==(const PropNumber& a, const PropNumber& b) = default;

 private:
  PropNumber(int major, std::string decimals)
      : major_(major), decimals_(std::move(decimals)) {}

  int major_ = 1;
  std::string decimals_;
};

PropNumber parse_prop_number(std::string_view text);

struct Proposition {
  PropNumber number;
  std::string text;
  std::string language;

  int group() const { return number.group(); }
};

// One language version of the text, in document order.
class Version {
 public:
  Version(std::string language, std::string translator,
          std::vector<Proposition> propositions);

  const std::string& language() const { return language_; }
  const std::string& translator() const { return translator_; }
  // Stable identifier: the language code, or "lang:translator" when a
  // translator is named.
  std::string id() const;

  const std::vector<Proposition>& propositions() const { return props_; }
  std::size_t size() const { return props_.size(); }
  bool empty() const { return props_.empty(); }

  const Proposition* find(const PropNumber& number) const;

 private:
  std::string language_;
  std::string translator_;
  std::vector<Proposition> props_;
  std::map<PropNumber, std::size_t> index_;
};

// Parses the line-oriented proposition format:
//   NUMBER<TAB>text       starts a record
//   anything else         continues the previous record
//   blank / "#..." lines  ignored
Version load_version(std::istream& in, std::string language,
                     std::string translator);
Version load_version_file(const std::filesystem::path& path,
                          std::string language, std::string translator);

// Version slots are sorted by (language, translator), so the row layout does
// not depend on the order the versions were passed in.
class ParallelCorpus {
 public:
  struct Row {
    PropNumber number;
    // One slot per version; index into that version's propositions.
    std::vector<std::optional<std::size_t>> slots;
  };

  struct Absence {
    PropNumber number;
    std::vector<std::string> missing_from;  // version ids
  };

  explicit ParallelCorpus(std::vector<Version> versions);

  const std::vector<Version>& versions() const { return versions_; }
  const std::vector<Row>& rows() const { return rows_; }

  // Index of the version with the given id or language; nullopt if absent
  // or (for a bare language) ambiguous.
  std::optional<std::size_t> find_version(std::string_view id_or_lang) const;

  const Proposition* at(const Row& row, std::size_t version) const;

  // Numbers absent from at least one version.
  std::vector<Absence> absences() const;

  // Structural parent that is present in the given version: drop the last
  // decimal digit, climbing further when the intermediate number does not
  // exist in the text.
  std::optional<PropNumber> structural_parent(const PropNumber& number,
                                              std::size_t version) const;

 private:
  std::vector<Version> versions_;
  std::vector<Row> rows_;
};

ParallelCorpus align_corpus(std::vector<Version> versions);

struct CountReport {
  std::size_t tokens = 0;
  std::size_t types = 0;
};

// Surface tokens after case folding, before stopword removal.
CountReport corpus_stats(const Version& version);

struct ManifestEntry {
  std::string language;
  std::string translator;
  std::filesystem::path path;
};

// TSV manifest: `lang<TAB>translator<TAB>path` per version. Optional
// directive lines `@resources<TAB>dir` and `@out<TAB>dir`. Relative paths
// resolve against the manifest's directory.
struct Manifest {
  std::vector<ManifestEntry> entries;
  std::optional<std::filesystem::path> resource_dir;
  std::optional<std::filesystem::path> output_dir;
};

Manifest load_manifest(const std::filesystem::path& path);
std::vector<Version> load_versions(const Manifest& manifest);

}  // namespace tnet
