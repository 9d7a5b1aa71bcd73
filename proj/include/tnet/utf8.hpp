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

// Minimal UTF-8 support: decoding, encoding and simple case folding for the
// scripts that occur in the corpus (Latin, Latin-1, Latin Extended-A/B,
// Greek, Cyrillic). Invalid bytes decode to U+FFFD.

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace tnet::utf8 {

std::u32string decode(std::string_view text);
std::string encode(std::u32string_view cps);
void append(std::string& out, char32_t cp);

char32_t to_lower(char32_t cp);
bool is_letter(char32_t cp);
bool is_digit(char32_t cp);

std::string fold_case(std::string_view text);

// Number of code points.
std::size_t length(std::string_view text);

}  // namespace tnet::utf8
