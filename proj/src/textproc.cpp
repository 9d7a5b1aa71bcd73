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

#include "tnet/textproc.hpp"

#include <algorithm>
#include <fstream>

#include "strings.hpp"
#include "tnet/error.hpp"
#include "tnet/utf8.hpp"

namespace tnet {

namespace {

bool is_word_char(char32_t cp) { return utf8::is_letter(cp) || utf8::is_digit(cp); }

bool is_joiner(char32_t cp) {
  return cp == U'-' || cp == U'\'' || cp == 0x2019 /* right single quote */ ||
         cp == 0x2010 /* hyphen */;
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

template <typename Fn>
void for_each_content_line(std::istream& in, Fn&& fn) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    detail::strip_cr(line);
    if (line_no == 1) detail::strip_bom(line);
    if (!line.empty() && line[0] == '#') continue;
    if (detail::trim(line).empty()) continue;
    fn(line, line_no);
  }
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text) {
  const std::u32string cps = utf8::decode(text);
  std::vector<std::string> tokens;
  std::u32string current;

  auto flush = [&] {
    if (current.empty()) return;
    if (current.size() > 1 || utf8::is_letter(current[0])) {
      tokens.push_back(utf8::encode(current));
    }
    current.clear();
  };

  for (std::size_t i = 0; i < cps.size(); ++i) {
    const char32_t cp = cps[i];
    if (is_word_char(cp)) {
      current.push_back(utf8::to_lower(cp));
    } else if (is_joiner(cp) && !current.empty() && i + 1 < cps.size() &&
               is_word_char(cps[i + 1])) {
      current.push_back(cp == 0x2010 ? U'-' : (cp == 0x2019 ? U'\'' : cp));
    } else {
      flush();
    }
  }
  flush();
  return tokens;
}

LangResources::LangResources(std::string language,
                             std::unordered_set<std::string> stopwords,
                             std::vector<SuffixRule> rules,
                             std::unordered_map<std::string, std::string> lemmas)
    : language_(std::move(language)),
      stopwords_(std::move(stopwords)),
      rules_(std::move(rules)),
      lemmas_(std::move(lemmas)) {
  for (const auto& [token, lemma] : lemmas_) lemma_values_.insert(lemma);
  std::stable_sort(rules_.begin(), rules_.end(),
                   [](const SuffixRule& a, const SuffixRule& b) {
                     return utf8::length(a.suffix) > utf8::length(b.suffix);
                   });
}

LangResources LangResources::load(const std::filesystem::path& dir,
                                  std::string language) {
  auto open = [&](const char* name, auto reader, auto& target) {
    const auto path = dir / name;
    if (!std::filesystem::exists(path)) return;
    std::ifstream in(path);
    if (!in) throw DataError("cannot open " + path.string());
    try {
      target = reader(in);
    } catch (const ParseError& e) {
      throw ParseError(path.string() + ": " + e.what(), e.position());
    }
  };
  std::unordered_set<std::string> stopwords;
  std::vector<SuffixRule> rules;
  std::unordered_map<std::string, std::string> lemmas;
  open("stopwords.txt", read_stopwords, stopwords);
  open("stem_rules.tsv", read_stem_rules, rules);
  open("lemmas.tsv", read_lemmas, lemmas);
  return LangResources(std::move(language), std::move(stopwords),
                       std::move(rules), std::move(lemmas));
}

bool LangResources::is_lemma(std::string_view token) const {
  return lemma_values_.find(std::string(token)) != lemma_values_.end();
}

bool LangResources::is_stopword(std::string_view token) const {
  return stopwords_.find(std::string(token)) != stopwords_.end();
}

std::unordered_set<std::string> read_stopwords(std::istream& in) {
  std::unordered_set<std::string> out;
  for_each_content_line(in, [&](const std::string& line, std::size_t) {
    out.insert(utf8::fold_case(detail::trim(line)));
  });
  return out;
}

std::vector<SuffixRule> read_stem_rules(std::istream& in) {
  std::vector<SuffixRule> out;
  for_each_content_line(in, [&](const std::string& line, std::size_t line_no) {
    const auto fields = detail::split(line, '\t');
    if (fields.size() > 2 || detail::trim(fields[0]).empty()) {
      throw ParseError("line " + std::to_string(line_no) +
                           ": expected `suffix<TAB>replacement`",
                       line_no);
    }
    out.push_back({utf8::fold_case(detail::trim(fields[0])),
                   fields.size() == 2
                       ? utf8::fold_case(detail::trim(fields[1]))
                       : std::string()});
  });
  return out;
}

std::unordered_map<std::string, std::string> read_lemmas(std::istream& in) {
  std::unordered_map<std::string, std::string> out;
  for_each_content_line(in, [&](const std::string& line, std::size_t line_no) {
    const auto fields = detail::split(line, '\t');
    if (fields.size() != 2 || detail::trim(fields[0]).empty() ||
        detail::trim(fields[1]).empty()) {
      throw ParseError("line " + std::to_string(line_no) +
                           ": expected `token<TAB>lemma`",
                       line_no);
    }
    out[utf8::fold_case(detail::trim(fields[0]))] =
        utf8::fold_case(detail::trim(fields[1]));
  });
  return out;
}

std::string stem(std::string_view token, const LangResources& resources) {
  const auto& lemmas = resources.lemmas();
  std::string current(token);
  // Every rewrite strictly shortens the word, so this terminates. Results are
  // either lemma values or words no rule applies to, so stem is idempotent.
  while (true) {
    if (resources.is_lemma(current)) return current;
    if (auto it = lemmas.find(current); it != lemmas.end()) return it->second;
    bool changed = false;
    for (const auto& rule : resources.rules()) {
      if (!ends_with(current, rule.suffix)) continue;
      std::string candidate =
          current.substr(0, current.size() - rule.suffix.size()) +
          rule.replacement;
      if (utf8::length(candidate) < LangResources::kMinStem ||
          candidate.size() >= current.size()) {
        continue;
      }
      current = std::move(candidate);
      changed = true;
      break;
    }
    if (!changed) return current;
  }
}

TokenBag::TokenBag(PropNumber owner, std::string language,
                   const std::vector<std::string>& tokens)
    : owner_(std::move(owner)), language_(std::move(language)) {
  std::map<std::string, std::size_t> counts;
  for (const auto& t : tokens) {
    if (t.empty()) continue;
    ++counts[t];
    ++size_;
  }
  counts_.assign(counts.begin(), counts.end());
}

std::size_t TokenBag::count(std::string_view token) const {
  const auto it = std::lower_bound(
      counts_.begin(), counts_.end(), token,
      [](const auto& entry, std::string_view t) { return entry.first < t; });
  return (it != counts_.end() && it->first == token) ? it->second : 0;
}

TokenBag normalize(const Proposition& prop, const LangResources& resources) {
  std::vector<std::string> kept;
  for (const auto& token : tokenize(prop.text)) {
    if (resources.is_stopword(token)) continue;
    auto stemmed = stem(token, resources);
    // "etwas" -> "etwa": a stem can land on another stopword.
    if (resources.is_stopword(stemmed)) continue;
    kept.push_back(std::move(stemmed));
  }
  return TokenBag(prop.number, prop.language, kept);
}

}  // namespace tnet
