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

#ifndef TITLEMINER_LEXICON_H_
#define TITLEMINER_LEXICON_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <regex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace titleminer {

// Raised when a lexicon file is missing, unreadable or holds a bad entry.
// file() names the offending file.
class LexiconError : public std::runtime_error {
 public:
  LexiconError(std::string file, const std::string &what)
      : std::runtime_error(file + ": " + what), file_(std::move(file)) {}

  const std::string &file() const { return file_; }

 private:
  std::string file_;
};

// An ordered family of case-insensitive regular-expression fragments.
class SuffixFamily {
 public:
  SuffixFamily() = default;

  // Throws std::regex_error or std::invalid_argument on a bad fragment.
  explicit SuffixFamily(std::vector<std::string> patterns);

  const std::vector<std::string> &patterns() const { return patterns_; }
  bool empty() const { return patterns_.empty(); }

  // Some fragment matches a token-aligned suffix of the phrase.
  bool matches_end(std::string_view phrase) const;

  // Some fragment matches the whole phrase.
  bool matches_whole(std::string_view phrase) const;

  // Length of the longest fragment match that starts the text and ends on
  // a word boundary; 0 when none does.
  std::size_t prefix_length(std::string_view text) const;

 private:
  std::vector<std::string> patterns_;
  std::regex end_;
  std::regex whole_;
  std::vector<std::regex> prefixes_;
};

// True iff the phrase, case-insensitively, ends with a token matching any
// pattern of the family. Throws std::invalid_argument on an empty phrase.
bool ending(std::string_view phrase, const SuffixFamily &patterns);

// File contents keyed by file name, e.g. "languages.txt".
using LexiconSources = std::map<std::string, std::string>;

inline constexpr const char *kLexiconFiles[] = {
    "languages.txt",         "tool_suffixes.txt",
    "resource_suffixes.txt", "method_suffixes.txt",
    "research_problem_suffixes.txt", "special_markers.txt",
    "non_content.txt",
};

// Gazetteers and suffix families behind every concept predicate. Immutable
// once built, so one instance can be shared across threads.
//
// File format: one entry per line, blank lines and lines starting with '#'
// ignored. Suffix and non-content entries are regular-expression fragments.
// In research_problem_suffixes.txt a line "@shared-task <fragment>" also
// registers the fragment as a shared-task name.
class Lexicon {
 public:
  static Lexicon load(const std::filesystem::path &dir);
  static Lexicon from_sources(const LexiconSources &sources);

  bool is_language(std::string_view phrase) const;
  bool is_tool(std::string_view phrase) const;
  bool is_resource(std::string_view phrase) const;
  bool is_method(std::string_view phrase) const;
  bool is_research_problem(std::string_view phrase) const;

  // The whole phrase names a shared task ("SemEval-2017 Task 5").
  bool is_shared_task(std::string_view phrase) const;

  // The title has a colon preceded by one token shaped like a system name:
  // an uppercase letter after the first character, a digit, or an internal
  // hyphen. Listed special markers also qualify. Casing matters here.
  bool has_special_case_word(std::string_view title) const;

  // The whole phrase is a generic description of the article.
  bool non_content_phrase(std::string_view phrase) const;

  // Length of the non-content phrase opening the title, 0 if there is none.
  std::size_t non_content_prefix(std::string_view title) const;

  const std::unordered_set<std::string> &language_names() const {
    return languages_;
  }
  const SuffixFamily &tool_suffixes() const { return tool_; }
  const SuffixFamily &resource_suffixes() const { return resource_; }
  const SuffixFamily &method_suffixes() const { return method_; }
  const SuffixFamily &research_problem_suffixes() const {
    return research_problem_;
  }
  const SuffixFamily &shared_task_patterns() const { return shared_task_; }
  const std::unordered_set<std::string> &special_markers() const {
    return special_markers_;
  }
  const SuffixFamily &non_content_phrases() const { return non_content_; }

 private:
  Lexicon() = default;

  std::unordered_set<std::string> languages_;
  SuffixFamily tool_;
  SuffixFamily resource_;
  SuffixFamily method_;
  SuffixFamily research_problem_;
  SuffixFamily shared_task_;
  std::unordered_set<std::string> special_markers_;
  SuffixFamily non_content_;
};

// Lexicon directory: $TITLE_MINER_LEXICON when set, else the bundled one.
std::filesystem::path default_lexicon_dir();

}  // namespace titleminer

#endif  // TITLEMINER_LEXICON_H_
