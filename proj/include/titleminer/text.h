// Copyright 2026 The title-miner Authors.
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

#ifndef TITLEMINER_TEXT_H_
#define TITLEMINER_TEXT_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace titleminer {

// ASCII-only case folding. Bytes >= 0x80 pass through unchanged so UTF-8
// sequences survive intact.
std::string to_lower(std::string_view s);

bool iequals(std::string_view a, std::string_view b);

inline bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

inline bool is_ascii_alpha(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

inline bool is_ascii_digit(char c) { return c >= '0' && c <= '9'; }

inline bool is_ascii_upper(char c) { return c >= 'A' && c <= 'Z'; }

// Returned views alias the argument.
std::string_view trim(std::string_view s);
std::string_view trim_chars(std::string_view s, std::string_view chars);

// Collapses every run of whitespace into one space and trims the ends.
std::string collapse_whitespace(std::string_view s);

// Lowercased and whitespace-collapsed form used for all term comparisons.
std::string normalize_term(std::string_view s);

struct Token {
  std::string_view text;
  std::size_t offset = 0;  // byte offset into the tokenized string
};

std::vector<Token> tokenize(std::string_view s);

// Number of UTF-8 code points (continuation bytes are not counted).
std::size_t utf8_length(std::string_view s);

}  // namespace titleminer

#endif  // TITLEMINER_TEXT_H_
