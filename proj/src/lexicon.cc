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

#include "titleminer/lexicon.h"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "titleminer/text.h"

#ifndef TITLEMINER_DEFAULT_LEXICON_DIR
#define TITLEMINER_DEFAULT_LEXICON_DIR "lexicon"
#endif

namespace titleminer {

namespace {

constexpr auto kFlags = std::regex::ECMAScript | std::regex::icase;

// Words that may precede a language name without changing its type.
const std::unordered_set<std::string> &language_modifiers() {
  static const std::unordered_set<std::string> kModifiers = {
      "ancient",   "old",     "middle",       "modern",   "classical",
      "standard",  "written", "spoken",       "colloquial", "medieval",
      "early",     "late",    "archaic",      "contemporary", "vedic",
      "biblical",  "literary", "simplified",  "traditional", "dialectal",
      "historical", "pre-modern", "code-switched", "informal", "formal",
  };
  return kModifiers;
}

std::string join_alternatives(const std::vector<std::string> &patterns) {
  std::string out;
  for (const auto &p : patterns) {
    if (!out.empty()) out += '|';
    out += "(?:" + p + ")";
  }
  return out;
}

struct Entry {
  std::string text;
  int line = 0;
};

std::vector<Entry> read_entries(std::string_view content) {
  std::vector<Entry> entries;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= content.size()) {
    std::size_t end = content.find('\n', pos);
    if (end == std::string_view::npos) end = content.size();
    ++line_no;
    std::string_view line = trim(content.substr(pos, end - pos));
    if (!line.empty() && line.front() != '#') {
      entries.push_back({std::string(line), line_no});
    }
    pos = end + 1;
  }
  return entries;
}

const std::string &require(const LexiconSources &sources,
                           const std::string &file) {
  auto it = sources.find(file);
  if (it == sources.end()) throw LexiconError(file, "missing lexicon file");
  return it->second;
}

void check_fragment(const std::string &file, const Entry &entry) {
  try {
    std::regex re("(?:" + entry.text + ")", kFlags);
    if (std::regex_match(std::string(), re)) {
      throw LexiconError(file, "line " + std::to_string(entry.line) +
                                   ": pattern '" + entry.text +
                                   "' matches the empty string");
    }
  } catch (const std::regex_error &e) {
    throw LexiconError(file, "line " + std::to_string(entry.line) +
                                 ": invalid pattern '" + entry.text +
                                 "': " + e.what());
  }
}

SuffixFamily load_family(const LexiconSources &sources,
                         const std::string &file,
                         SuffixFamily *shared_tasks = nullptr) {
  std::vector<std::string> patterns;
  std::vector<std::string> tasks;
  for (Entry entry : read_entries(require(sources, file))) {
    bool task = false;
    if (entry.text.front() == '@') {
      constexpr std::string_view kDirective = "@shared-task";
      if (shared_tasks == nullptr ||
          entry.text.compare(0, kDirective.size(), kDirective) != 0) {
        throw LexiconError(file, "line " + std::to_string(entry.line) +
                                     ": unknown directive '" + entry.text +
                                     "'");
      }
      entry.text = std::string(trim(
          std::string_view(entry.text).substr(kDirective.size())));
      if (entry.text.empty()) {
        throw LexiconError(file, "line " + std::to_string(entry.line) +
                                     ": @shared-task without a pattern");
      }
      task = true;
    }
    check_fragment(file, entry);
    patterns.push_back(entry.text);
    if (task) tasks.push_back(entry.text);
  }
  if (patterns.empty()) throw LexiconError(file, "no patterns");
  if (shared_tasks != nullptr) *shared_tasks = SuffixFamily(std::move(tasks));
  return SuffixFamily(std::move(patterns));
}

std::unordered_set<std::string> load_names(const LexiconSources &sources,
                                           const std::string &file,
                                           bool allow_empty) {
  std::unordered_set<std::string> names;
  for (const Entry &entry : read_entries(require(sources, file))) {
    names.insert(normalize_term(entry.text));
  }
  if (names.empty() && !allow_empty) throw LexiconError(file, "no entries");
  return names;
}

}  // namespace

SuffixFamily::SuffixFamily(std::vector<std::string> patterns)
    : patterns_(std::move(patterns)) {
  if (patterns_.empty()) return;
  std::string alternatives = join_alternatives(patterns_);
  end_ = std::regex("(?:^|[^A-Za-z0-9])(?:" + alternatives + ")$", kFlags);
  whole_ = std::regex("(?:" + alternatives + ")", kFlags);
  for (const auto &p : patterns_) {
    prefixes_.emplace_back("^(?:" + p + ")(?![A-Za-z0-9])", kFlags);
  }
}

bool SuffixFamily::matches_end(std::string_view phrase) const {
  if (patterns_.empty()) return false;
  return std::regex_search(phrase.begin(), phrase.end(), end_);
}

bool SuffixFamily::matches_whole(std::string_view phrase) const {
  if (patterns_.empty()) return false;
  return std::regex_match(phrase.begin(), phrase.end(), whole_);
}

std::size_t SuffixFamily::prefix_length(std::string_view text) const {
  std::size_t best = 0;
  std::match_results<std::string_view::const_iterator> m;
  for (const auto &re : prefixes_) {
    if (std::regex_search(text.begin(), text.end(), m, re)) {
      best = std::max(best, static_cast<std::size_t>(m.length(0)));
    }
  }
  return best;
}

bool ending(std::string_view phrase, const SuffixFamily &patterns) {
  if (trim(phrase).empty()) {
    throw std::invalid_argument("ending: empty phrase");
  }
  return patterns.matches_end(phrase);
}

Lexicon Lexicon::load(const std::filesystem::path &dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw LexiconError(dir.string(), "lexicon directory not found");
  }
  LexiconSources sources;
  for (const char *name : kLexiconFiles) {
    std::filesystem::path path = dir / name;
    std::ifstream in(path, std::ios::binary);
    if (!in) throw LexiconError(path.string(), "cannot read lexicon file");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    sources[name] = buffer.str();
  }
  try {
    return from_sources(sources);
  } catch (const LexiconError &e) {
    // Report the full path rather than the bare file name.
    std::string what = e.what();
    throw LexiconError((dir / e.file()).string(),
                       what.substr(e.file().size() + 2));
  }
}

Lexicon Lexicon::from_sources(const LexiconSources &sources) {
  Lexicon lex;
  lex.languages_ = load_names(sources, "languages.txt", false);
  lex.tool_ = load_family(sources, "tool_suffixes.txt");
  lex.resource_ = load_family(sources, "resource_suffixes.txt");
  lex.method_ = load_family(sources, "method_suffixes.txt");
  lex.research_problem_ = load_family(
      sources, "research_problem_suffixes.txt", &lex.shared_task_);
  lex.special_markers_ = load_names(sources, "special_markers.txt", true);
  lex.non_content_ = load_family(sources, "non_content.txt");
  return lex;
}

bool Lexicon::is_language(std::string_view phrase) const {
  if (trim(phrase).empty()) {
    throw std::invalid_argument("is_language: empty phrase");
  }
  std::string lowered = to_lower(phrase);
  std::vector<Token> tokens = tokenize(lowered);
  const auto &modifiers = language_modifiers();
  for (std::size_t k = 0; k < tokens.size(); ++k) {
    if (k > 0 && !modifiers.contains(std::string(tokens[k - 1].text))) break;
    std::string_view rest = std::string_view(lowered).substr(tokens[k].offset);
    if (languages_.contains(collapse_whitespace(rest))) return true;
  }
  return false;
}

bool Lexicon::is_tool(std::string_view phrase) const {
  return ending(phrase, tool_);
}

bool Lexicon::is_resource(std::string_view phrase) const {
  return ending(phrase, resource_);
}

bool Lexicon::is_method(std::string_view phrase) const {
  return ending(phrase, method_);
}

bool Lexicon::is_research_problem(std::string_view phrase) const {
  return ending(phrase, research_problem_);
}

bool Lexicon::is_shared_task(std::string_view phrase) const {
  return shared_task_.matches_whole(trim(phrase));
}

bool Lexicon::has_special_case_word(std::string_view title) const {
  if (trim(title).empty()) {
    throw std::invalid_argument("has_special_case_word: empty title");
  }
  std::size_t colon = title.find(':');
  if (colon == std::string_view::npos) return false;
  std::string_view word = trim(title.substr(0, colon));
  if (word.empty()) return false;
  for (char c : word) {
    if (is_space(c)) return false;
  }
  if (special_markers_.contains(to_lower(word))) return true;
  if (utf8_length(word) < 2) return false;
  bool letter = std::any_of(word.begin(), word.end(), is_ascii_alpha);
  if (!letter) return false;
  for (std::size_t i = 0; i < word.size(); ++i) {
    char c = word[i];
    if (i > 0 && is_ascii_upper(c)) return true;
    if (is_ascii_digit(c)) return true;
    if (c == '-' && i > 0 && i + 1 < word.size()) return true;
  }
  return false;
}

bool Lexicon::non_content_phrase(std::string_view phrase) const {
  if (trim(phrase).empty()) {
    throw std::invalid_argument("non_content_phrase: empty phrase");
  }
  return non_content_.matches_whole(trim_chars(phrase, " \t.,;:!?"));
}

std::size_t Lexicon::non_content_prefix(std::string_view title) const {
  return non_content_.prefix_length(title);
}

std::filesystem::path default_lexicon_dir() {
  if (const char *env = std::getenv("TITLE_MINER_LEXICON");
      env != nullptr && *env != '\0') {
    return env;
  }
  return TITLEMINER_DEFAULT_LEXICON_DIR;
}

}  // namespace titleminer
