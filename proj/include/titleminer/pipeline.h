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

#ifndef TITLEMINER_PIPELINE_H_
#define TITLEMINER_PIPELINE_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "titleminer/concept.h"
#include "titleminer/corpus.h"
#include "titleminer/lexicon.h"
#include "titleminer/templates.h"
#include "titleminer/typer.h"

namespace titleminer {

struct ExtractionRecord {
  Title title;
  TemplateKind template_kind = TemplateKind::kDefault;
  TitleExpression expression;
  // Set when typing this title failed; the expression is then empty.
  std::string error;

  bool operator==(const ExtractionRecord &) const = default;
};

// classify, then type_template.
ExtractionRecord parse_title(const Title &title, const Lexicon &lexicon,
                             const TyperOptions &options = {});

// One record per title in input order. Work is spread over `jobs` threads;
// the result does not depend on the thread count. A title that throws gets
// a record carrying the error instead of aborting the run.
std::vector<ExtractionRecord> parse_corpus(const std::vector<Title> &titles,
                                           const Lexicon &lexicon,
                                           const TyperOptions &options = {},
                                           unsigned jobs = 1);

class RecordFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Single-line JSON objects. Titles carry `text`, `year` and `source_key`.
// Records carry `title`, `year`, `source_key`, `template`, the six concept
// lists, and `error` when set.
std::string serialize_title(const Title &title);
Title deserialize_title(std::string_view line);
std::string serialize_record(const ExtractionRecord &record);
ExtractionRecord deserialize_record(std::string_view line);

// Parses newline-delimited records; blank lines are skipped. Throws
// RecordFormatError naming the offending line.
std::vector<ExtractionRecord> read_records(std::string_view ndjson);

}  // namespace titleminer

#endif  // TITLEMINER_PIPELINE_H_
