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

// Shared helpers for the test binaries: paths, resources, generators.

#pragma once

#include <unistd.h>

#include <cstdint>
#include <filesystem>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "tnet/corpus.hpp"
#include "tnet/textproc.hpp"

namespace tnet::test {

inline std::filesystem::path fixture_dir() { return TNET_FIXTURE_DIR; }
inline std::filesystem::path data_dir() { return TNET_DATA_DIR; }
inline std::filesystem::path resource_dir() { return data_dir() / "resources"; }

inline LangResources shipped(const std::string& lang) {
  return LangResources::load(resource_dir() / lang, lang);
}

// Resources that leave tokens untouched: no stopwords, no rules.
inline LangResources identity_resources(const std::string& lang = "xx") {
  return LangResources(lang, {}, {});
}

inline Version version_from(const std::string& text, const std::string& lang = "en",
                            const std::string& translator = "") {
  std::istringstream in(text);
  return load_version(in, lang, translator);
}

// A fresh, empty directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() /
             ("tnet-test-" + name + "-" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  std::size_t below(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(gen_);
  }
  bool coin() { return below(2) == 1; }
  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

// Tokens drawn from a vocabulary of `vocab` short words w0, w1, ...
inline std::vector<std::string> random_tokens(Rng& rng, std::size_t max_len, std::size_t vocab) {
  std::vector<std::string> out(rng.below(max_len + 1));
  for (auto& t : out) t = "w" + std::to_string(rng.below(vocab));
  return out;
}

// Random outline numbers: a few under each group, always distinct.
inline std::vector<std::string> random_numbers(Rng& rng, std::size_t count) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (out.size() < count) {
    const auto group = 1 + rng.below(7);
    out.push_back(std::to_string(group) + "." + std::to_string(++i));
  }
  return out;
}

}  // namespace tnet::test
