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

#include "titleminer/corpus.h"

#include <cctype>
#include <charconv>
#include <string>
#include <unordered_set>

#include "titleminer/text.h"

namespace titleminer {

namespace {

bool is_identifier_char(char c) {
  return is_ascii_alpha(c) || is_ascii_digit(c) || c == '_' || c == '-' ||
         c == ':' || c == '.' || c == '+' || c == '/';
}

// Cursor over one entry body. Field-level problems are reported through
// `error` rather than thrown so that a bad entry is skipped, not fatal.
class FieldReader {
 public:
  explicit FieldReader(std::string_view body) : body_(body) {}

  void skip_space() {
    while (pos_ < body_.size() && is_space(body_[pos_])) ++pos_;
  }

  bool at_end() {
    skip_space();
    return pos_ >= body_.size();
  }

  bool consume(char c) {
    skip_space();
    if (pos_ < body_.size() && body_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string_view read_identifier() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < body_.size() && is_identifier_char(body_[pos_])) ++pos_;
    return body_.substr(start, pos_ - start);
  }

  // Reads `part (# part)*`, concatenating the parts.
  std::optional<std::string> read_value(std::string *error) {
    std::string value;
    do {
      auto part = read_part(error);
      if (!part) return std::nullopt;
      value += *part;
    } while (consume('#'));
    return value;
  }

 private:
  std::optional<std::string> read_part(std::string *error) {
    skip_space();
    if (pos_ >= body_.size()) {
      *error = "missing field value";
      return std::nullopt;
    }
    char c = body_[pos_];
    if (c == '{') return read_braced(error);
    if (c == '"') return read_quoted(error);
    std::size_t start = pos_;
    while (pos_ < body_.size() && is_identifier_char(body_[pos_])) ++pos_;
    if (pos_ == start) {
      *error = std::string("unexpected character '") + c + "' in value";
      return std::nullopt;
    }
    return std::string(body_.substr(start, pos_ - start));
  }

  std::optional<std::string> read_braced(std::string *error) {
    std::size_t start = ++pos_;
    int depth = 1;
    for (; pos_ < body_.size(); ++pos_) {
      if (body_[pos_] == '\\') {
        ++pos_;
        continue;
      }
      if (body_[pos_] == '{') ++depth;
      if (body_[pos_] == '}' && --depth == 0) {
        std::string out(body_.substr(start, pos_ - start));
        ++pos_;
        return out;
      }
    }
    *error = "unbalanced braces in value";
    return std::nullopt;
  }

  std::optional<std::string> read_quoted(std::string *error) {
    std::size_t start = ++pos_;
    int depth = 0;
    for (; pos_ < body_.size(); ++pos_) {
      char c = body_[pos_];
      if (c == '\\') {
        ++pos_;
        continue;
      }
      if (c == '{') ++depth;
      if (c == '}') --depth;
      if (c == '"' && depth == 0) {
        std::string out(body_.substr(start, pos_ - start));
        ++pos_;
        return out;
      }
    }
    *error = "unterminated quoted value";
    return std::nullopt;
  }

  std::string_view body_;
  std::size_t pos_ = 0;
};

// Returns the offset of the delimiter closing the entry opened at `open`.
std::size_t find_entry_end(std::string_view input, std::size_t open,
                           std::size_t entry_start) {
  char close = input[open] == '{' ? '}' : ')';
  int depth = 0;
  for (std::size_t i = open + 1; i < input.size(); ++i) {
    char c = input[i];
    if (c == '\\') {
      ++i;
      continue;
    }
    if (c == '{') {
      ++depth;
    } else if (c == '}') {
      if (depth == 0 && close == '}') return i;
      if (--depth < 0) break;
    } else if (c == ')' && close == ')' && depth == 0) {
      return i;
    }
  }
  throw BibtexError("unterminated BibTeX entry", entry_start);
}

std::optional<int> parse_year(std::string_view text) {
  text = trim(text);
  if (text.empty()) return std::nullopt;
  int year = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), year);
  if (ec != std::errc() || end != text.data() + text.size()) {
    return std::nullopt;
  }
  return year;
}

void read_entry(std::string_view body, std::size_t entry_start,
                BibtexParseResult &result) {
  ++result.entries_seen;
  auto comma = body.find(',');
  std::string_view key = trim(body.substr(0, comma));
  if (key.empty()) {
    result.warnings.push_back("entry at byte " + std::to_string(entry_start) +
                              " has no key; skipped");
    return;
  }

  std::optional<std::string> title;
  std::optional<int> year;
  if (comma != std::string_view::npos) {
    FieldReader reader(body.substr(comma + 1));
    while (!reader.at_end()) {
      if (reader.consume(',')) continue;
      std::string_view name = reader.read_identifier();
      std::string error;
      if (name.empty() || !reader.consume('=')) {
        error = "malformed field";
      }
      std::optional<std::string> value;
      if (error.empty()) value = reader.read_value(&error);
      if (!error.empty()) {
        result.warnings.push_back("entry '" + std::string(key) + "' at byte " +
                                  std::to_string(entry_start) + ": " + error +
                                  "; skipped");
        return;
      }
      std::string field = to_lower(name);
      if (field == "title") {
        title = std::move(*value);
      } else if (field == "year") {
        year = parse_year(*value);
      }
    }
  }

  if (!title || trim(*title).empty()) {
    ++result.skipped_without_title;
    return;
  }
  result.records.push_back({std::string(key), std::move(*title), year});
}

// Maps the argument of an accent command to its base letter.
void append_base(std::string &out, std::string_view arg) {
  arg = trim(arg);
  if (arg == "\\i") {
    out.push_back('i');
  } else if (arg == "\\j") {
    out.push_back('j');
  } else {
    out.append(arg);
  }
}

std::string_view named_symbol(std::string_view name) {
  if (name == "ss") return "ss";
  if (name == "o" || name == "i" || name == "j" || name == "l") return name;
  if (name == "O" || name == "L") return name;
  if (name == "ae" || name == "AE" || name == "oe" || name == "OE") return name;
  if (name == "aa") return "a";
  if (name == "AA") return "A";
  if (name == "textendash" || name == "textemdash") return "-";
  if (name == "textquoteright") return "'";
  return {};
}

bool is_letter_accent(std::string_view name) {
  return name.size() == 1 && std::string_view("cvuHkrdbt").find(name[0]) !=
                                 std::string_view::npos;
}

}  // namespace

BibtexParseResult parse_bibtex(std::string_view input) {
  BibtexParseResult result;
  std::size_t pos = 0;
  while (true) {
    std::size_t at = input.find('@', pos);
    if (at == std::string_view::npos) break;
    std::size_t i = at + 1;
    while (i < input.size() && is_space(input[i])) ++i;
    std::size_t type_start = i;
    while (i < input.size() && is_ascii_alpha(input[i])) ++i;
    std::string type = to_lower(input.substr(type_start, i - type_start));
    while (i < input.size() && is_space(input[i])) ++i;
    if (type.empty() || i >= input.size() ||
        (input[i] != '{' && input[i] != '(')) {
      // Text outside entries is a comment in BibTeX.
      pos = at + 1;
      continue;
    }
    std::size_t close = find_entry_end(input, i, at);
    if (type != "comment" && type != "preamble" && type != "string") {
      read_entry(input.substr(i + 1, close - i - 1), at, result);
    }
    pos = close + 1;
  }
  return result;
}

std::string normalize_title_text(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  std::size_t i = 0;
  auto read_argument = [&](std::size_t &j) -> std::string_view {
    while (j < raw.size() && raw[j] == ' ') ++j;
    if (j >= raw.size()) return {};
    if (raw[j] == '{') {
      std::size_t end = raw.find('}', j);
      if (end == std::string_view::npos) end = raw.size();
      std::string_view arg = raw.substr(j + 1, end - j - 1);
      j = end < raw.size() ? end + 1 : end;
      return arg;
    }
    if (raw[j] == '\\') {
      std::size_t start = j++;
      while (j < raw.size() && is_ascii_alpha(raw[j])) ++j;
      return raw.substr(start, j - start);
    }
    std::size_t len = 1;
    // Keep whole UTF-8 sequences together.
    while (j + len < raw.size() &&
           (static_cast<unsigned char>(raw[j + len]) & 0xC0) == 0x80) {
      ++len;
    }
    std::string_view arg = raw.substr(j, len);
    j += len;
    return arg;
  };

  while (i < raw.size()) {
    char c = raw[i];
    unsigned char u = static_cast<unsigned char>(c);
    if (c == '\\') {
      if (i + 1 >= raw.size()) {
        ++i;
        continue;
      }
      char next = raw[i + 1];
      if (std::string_view("'\"^`~=.").find(next) != std::string_view::npos) {
        std::size_t j = i + 2;
        append_base(out, read_argument(j));
        i = j;
        continue;
      }
      if (!is_ascii_alpha(next)) {
        // Escaped symbol: \& \% \_ \$ \# keep the symbol; braces, control
        // space and discretionary hyphens do not survive.
        if (std::string_view("&%_$#").find(next) != std::string_view::npos) {
          out.push_back(next);
        } else if (next == ' ' || next == '\\' || next == ',') {
          out.push_back(' ');
        }
        i += 2;
        continue;
      }
      std::size_t j = i + 1;
      while (j < raw.size() && is_ascii_alpha(raw[j])) ++j;
      std::string_view name = raw.substr(i + 1, j - i - 1);
      if (is_letter_accent(name) && j < raw.size() &&
          (raw[j] == '{' || raw[j] == ' ')) {
        append_base(out, read_argument(j));
        i = j;
        continue;
      }
      if (auto sym = named_symbol(name); !sym.empty()) {
        out.append(sym);
        i = j;
        continue;
      }
      if (raw.substr(j, 2) == "{}") {
        out.append(name);  // \LaTeX{}
        i = j + 2;
      } else if (j < raw.size() && raw[j] == '{') {
        i = j;  // formatting command: keep its argument only
      } else {
        out.append(name);
        i = j;
      }
      continue;
    }
    if (c == '{' || c == '}' || c == '$') {
      ++i;
      continue;
    }
    if (c == '~') {
      out.push_back(' ');
      ++i;
      continue;
    }
    if (c == '-') {
      out.push_back('-');
      while (i < raw.size() && raw[i] == '-') ++i;
      continue;
    }
    // U+2010..U+2015 and U+2212 become an ASCII hyphen; U+00A0 a space.
    if (u == 0xE2 && i + 2 < raw.size()) {
      unsigned char b1 = static_cast<unsigned char>(raw[i + 1]);
      unsigned char b2 = static_cast<unsigned char>(raw[i + 2]);
      if ((b1 == 0x80 && b2 >= 0x90 && b2 <= 0x95) ||
          (b1 == 0x88 && b2 == 0x92)) {
        out.push_back('-');
        i += 3;
        continue;
      }
    }
    if (u == 0xC2 && i + 1 < raw.size() &&
        static_cast<unsigned char>(raw[i + 1]) == 0xA0) {
      out.push_back(' ');
      i += 2;
      continue;
    }
    out.push_back(c);
    ++i;
  }
  return collapse_whitespace(out);
}

Title normalize_title(const RawRecord &record) {
  std::string text = normalize_title_text(record.title_raw);
  if (text.empty()) {
    throw InvalidTitleError("title of '" + record.entry_key +
                            "' is empty after normalization");
  }
  return {std::move(text), record.year, record.entry_key};
}

bool is_valid_title(std::string_view text) {
  if (utf8_length(text) < 2) return false;
  for (char c : text) {
    // Non-ASCII code points count as letters.
    if (is_ascii_alpha(c) || static_cast<unsigned char>(c) >= 0x80) {
      return true;
    }
  }
  return false;
}

FilterResult dedup_and_filter(const std::vector<Title> &titles) {
  FilterResult result;
  std::unordered_set<std::string> seen;
  for (const Title &title : titles) {
    if (!is_valid_title(title.text)) {
      ++result.invalid_removed;
      continue;
    }
    if (!seen.insert(normalize_term(title.text)).second) {
      ++result.duplicates_removed;
      continue;
    }
    result.titles.push_back(title);
  }
  return result;
}

}  // namespace titleminer
