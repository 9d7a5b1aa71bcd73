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

#include "tnet/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <unordered_set>

#include "strings.hpp"
#include "tnet/error.hpp"
#include "tnet/textproc.hpp"

namespace tnet {

PropNumber PropNumber::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty proposition number", 0);
  const char lead = text[0];
  if (lead < '1' || lead > '7') {
    throw ParseError("proposition number '" + std::string(text) +
                         "': expected group digit 1-7 at position 0",
                     0);
  }
  if (text.size() == 1) return PropNumber(lead - '0', {});
  if (text[1] != '.') {
    throw ParseError("proposition number '" + std::string(text) +
                         "': expected '.' at position 1",
                     1);
  }
  if (text.size() == 2) {
    throw ParseError("proposition number '" + std::string(text) +
                         "': expected digit at position 2",
                     2);
  }
  std::string decimals;
  for (std::size_t i = 2; i < text.size(); ++i) {
    const char c = text[i];
    if (c < '0' || c > '9') {
      throw ParseError("proposition number '" + std::string(text) +
                           "': unexpected character at position " +
                           std::to_string(i),
                       i);
    }
    decimals.push_back(c);
  }
  return PropNumber(lead - '0', std::move(decimals));
}

PropNumber parse_prop_number(std::string_view text) {
  return PropNumber::parse(text);
}

std::string PropNumber::str() const {
  std::string out(1, static_cast<char>('0' + major_));
  if (!decimals_.empty()) {
    out.push_back('.');
    out += decimals_;
  }
  return out;
}

std::optional<PropNumber> PropNumber::parent() const {
  if (decimals_.empty()) return std::nullopt;
  return PropNumber(major_, decimals_.substr(0, decimals_.size() - 1));
}

std::strong_ordering operator<=>(const PropNumber& a, const PropNumber& b) {
  if (auto c = a.major_ <=> b.major_; c != 0) return c;
  const int c = a.decimals_.compare(b.decimals_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Version::Version(std::string language, std::string translator,
                 std::vector<Proposition> propositions)
    : language_(std::move(language)),
      translator_(std::move(translator)),
      props_(std::move(propositions)) {
  for (std::size_t i = 0; i < props_.size(); ++i) {
    if (!index_.emplace(props_[i].number, i).second) {
      throw DataError("duplicate proposition number " +
                      props_[i].number.str());
    }
  }
}

std::string Version::id() const {
  return translator_.empty() ? language_ : language_ + ":" + translator_;
}

const Proposition* Version::find(const PropNumber& number) const {
  const auto it = index_.find(number);
  return it == index_.end() ? nullptr : &props_[it->second];
}

Version load_version(std::istream& in, std::string language,
                     std::string translator) {
  std::vector<Proposition> props;
  std::set<PropNumber> seen;
  std::string line;
  std::size_t line_no = 0;

  auto finish_last = [&](std::size_t at_line) {
    if (props.empty()) return;
    auto& text = props.back().text;
    text = std::string(detail::trim(text));
    if (text.empty()) {
      throw ParseError("line " + std::to_string(at_line) +
                           ": proposition " + props.back().number.str() +
                           " has no text",
                       at_line);
    }
  };

  std::size_t record_line = 0;
  while (std::getline(in, line)) {
    ++line_no;
    detail::strip_cr(line);
    if (line_no == 1) detail::strip_bom(line);
    if (!line.empty() && line[0] == '#') continue;
    if (detail::trim(line).empty()) continue;

    std::optional<PropNumber> number;
    const auto tab = line.find('\t');
    if (tab != std::string::npos && tab > 0) {
      try {
        number = PropNumber::parse(std::string_view(line).substr(0, tab));
      } catch (const ParseError&) {
        number.reset();
      }
    }

    if (number) {
      finish_last(record_line);
      if (!seen.insert(*number).second) {
        throw DataError("line " + std::to_string(line_no) +
                        ": duplicate proposition number " + number->str());
      }
      props.push_back(Proposition{
          *number, std::string(detail::trim(line.substr(tab + 1))), language});
      record_line = line_no;
      continue;
    }

    if (props.empty()) {
      throw ParseError("line " + std::to_string(line_no) +
                           ": text before the first numbered proposition",
                       line_no);
    }
    auto& text = props.back().text;
    const auto piece = detail::trim(line);
    if (!text.empty()) text.push_back(' ');
    text.append(piece);
  }
  finish_last(record_line);
  if (props.empty()) throw DataError("no propositions in input");
  return Version(std::move(language), std::move(translator), std::move(props));
}

Version load_version_file(const std::filesystem::path& path,
                          std::string language, std::string translator) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path.string());
  try {
    return load_version(in, std::move(language), std::move(translator));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what(), e.position());
  } catch (const DataError& e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

ParallelCorpus::ParallelCorpus(std::vector<Version> versions)
    : versions_(std::move(versions)) {
  if (versions_.empty()) throw DataError("cannot align zero versions");
  std::stable_sort(versions_.begin(), versions_.end(),
                   [](const Version& a, const Version& b) {
                     if (a.language() != b.language()) {
                       return a.language() < b.language();
                     }
                     return a.translator() < b.translator();
                   });
  std::map<PropNumber, std::vector<std::optional<std::size_t>>> by_number;
  for (std::size_t v = 0; v < versions_.size(); ++v) {
    const auto& props = versions_[v].propositions();
    for (std::size_t i = 0; i < props.size(); ++i) {
      auto& slots = by_number[props[i].number];
      slots.resize(versions_.size());
      slots[v] = i;
    }
  }
  rows_.reserve(by_number.size());
  for (auto& [number, slots] : by_number) {
    slots.resize(versions_.size());
    rows_.push_back(Row{number, std::move(slots)});
  }
}

std::optional<std::size_t> ParallelCorpus::find_version(
    std::string_view id_or_lang) const {
  for (std::size_t v = 0; v < versions_.size(); ++v) {
    if (versions_[v].id() == id_or_lang) return v;
  }
  std::optional<std::size_t> found;
  for (std::size_t v = 0; v < versions_.size(); ++v) {
    if (versions_[v].language() == id_or_lang) {
      if (found) return std::nullopt;
      found = v;
    }
  }
  return found;
}

const Proposition* ParallelCorpus::at(const Row& row,
                                      std::size_t version) const {
  const auto& slot = row.slots.at(version);
  if (!slot) return nullptr;
  return &versions_[version].propositions()[*slot];
}

std::vector<ParallelCorpus::Absence> ParallelCorpus::absences() const {
  std::vector<Absence> out;
  for (const auto& row : rows_) {
    Absence a{row.number, {}};
    for (std::size_t v = 0; v < versions_.size(); ++v) {
      if (!row.slots[v]) a.missing_from.push_back(versions_[v].id());
    }
    if (!a.missing_from.empty()) out.push_back(std::move(a));
  }
  return out;
}

std::optional<PropNumber> ParallelCorpus::structural_parent(
    const PropNumber& number, std::size_t version) const {
  const auto& ver = versions_.at(version);
  auto candidate = number.parent();
  while (candidate) {
    if (ver.find(*candidate)) return candidate;
    candidate = candidate->parent();
  }
  return std::nullopt;
}

ParallelCorpus align_corpus(std::vector<Version> versions) {
  return ParallelCorpus(std::move(versions));
}

CountReport corpus_stats(const Version& version) {
  CountReport report;
  std::unordered_set<std::string> types;
  for (const auto& prop : version.propositions()) {
    for (auto& token : tokenize(prop.text)) {
      ++report.tokens;
      types.insert(std::move(token));
    }
  }
  report.types = types.size();
  return report;
}

Manifest load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open manifest " + path.string());
  const auto base = path.parent_path();
  auto resolve = [&](const std::string& p) {
    std::filesystem::path fp(p);
    return fp.is_absolute() ? fp : base / fp;
  };

  Manifest manifest;
  std::set<std::pair<std::string, std::string>> keys;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    detail::strip_cr(line);
    if (line_no == 1) detail::strip_bom(line);
    if (line.empty() || line[0] == '#' || detail::trim(line).empty()) continue;
    const auto fields = detail::split(line, '\t');
    if (fields[0] == "@resources" || fields[0] == "@out") {
      if (fields.size() != 2) {
        throw ParseError(path.string() + ":" + std::to_string(line_no) +
                             ": expected `" + fields[0] + "<TAB>dir`",
                         line_no);
      }
      (fields[0] == "@out" ? manifest.output_dir : manifest.resource_dir) =
          resolve(fields[1]);
      continue;
    }
    if (fields.size() != 3 || fields[0].empty() || fields[2].empty()) {
      throw ParseError(path.string() + ":" + std::to_string(line_no) +
                           ": expected `lang<TAB>translator<TAB>path`",
                       line_no);
    }
    if (!keys.emplace(fields[0], fields[1]).second) {
      throw DataError(path.string() + ":" + std::to_string(line_no) +
                      ": duplicate version " + fields[0] + "/" + fields[1]);
    }
    manifest.entries.push_back({fields[0], fields[1], resolve(fields[2])});
  }
  return manifest;
}

std::vector<Version> load_versions(const Manifest& manifest) {
  std::vector<Version> out;
  out.reserve(manifest.entries.size());
  for (const auto& e : manifest.entries) {
    out.push_back(load_version_file(e.path, e.language, e.translator));
  }
  return out;
}

}  // namespace tnet
