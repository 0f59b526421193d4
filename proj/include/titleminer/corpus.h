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

#ifndef TITLEMINER_CORPUS_H_
#define TITLEMINER_CORPUS_H_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace titleminer {

// One BibTeX entry carrying a title. The title is kept verbatim, markup
// included.
struct RawRecord {
  std::string entry_key;
  std::string title_raw;
  std::optional<int> year;

  bool operator==(const RawRecord &) const = default;
};

// A normalized article title.
struct Title {
  std::string text;
  std::optional<int> year;
  std::string source_key;

  bool operator==(const Title &) const = default;
};

// Raised when an entry cannot be delimited (unbalanced braces or quotes
// running to end of input).
class BibtexError : public std::runtime_error {
 public:
  BibtexError(const std::string &what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class InvalidTitleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct BibtexParseResult {
  std::vector<RawRecord> records;
  std::size_t entries_seen = 0;
  std::size_t skipped_without_title = 0;
  // Non-fatal problems: entries that were delimited but could not be read.
  std::vector<std::string> warnings;
};

// Reads the subset of BibTeX needed for title harvesting: entry
// delimitation plus the `title` and `year` fields, with brace, quote and
// bare values. @string, @preamble and @comment blocks are skipped; string
// macros are not expanded.
BibtexParseResult parse_bibtex(std::string_view input);

// Strips braces, resolves LaTeX accents and escapes, unifies dashes and
// collapses whitespace. Casing is preserved. Throws InvalidTitleError when
// nothing is left.
Title normalize_title(const RawRecord &record);

// Cleans one title string without the record wrapper.
std::string normalize_title_text(std::string_view raw);

// Rejects degenerate titles: shorter than two characters or without any
// letter.
bool is_valid_title(std::string_view text);

struct FilterResult {
  std::vector<Title> titles;
  std::size_t duplicates_removed = 0;
  std::size_t invalid_removed = 0;
};

// Drops invalid titles and case-insensitive duplicates, keeping the first
// occurrence and the input order.
FilterResult dedup_and_filter(const std::vector<Title> &titles);

}  // namespace titleminer

#endif  // TITLEMINER_CORPUS_H_
