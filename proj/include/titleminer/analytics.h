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

#ifndef TITLEMINER_ANALYTICS_H_
#define TITLEMINER_ANALYTICS_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "titleminer/concept.h"
#include "titleminer/pipeline.h"
#include "titleminer/templates.h"

namespace titleminer {

// (term, count) pairs by descending count, ties broken lexicographically.
using RankedTerms = std::vector<std::pair<std::string, std::size_t>>;

// Only concepts with at least one extracted term appear.
using FrequencyTable = std::map<ConceptType, RankedTerms>;

// Terms are aggregated after lowercasing and whitespace normalization.
FrequencyTable concept_frequencies(const std::vector<ExtractionRecord> &records);

inline constexpr const char *kTwentiethCentury = "20th";
inline constexpr const char *kTwentyFirstCentury = "21st";

struct TrendTable {
  ConceptType concept_type = ConceptType::kResearchProblem;
  // Keyed by kTwentiethCentury (year <= 2000) and kTwentyFirstCentury.
  std::map<std::string, RankedTerms> buckets;
};

struct CenturySplit {
  // One table per concept, both buckets always present.
  std::map<ConceptType, TrendTable> tables;
  std::size_t titles_20th = 0;
  std::size_t titles_21st = 0;
  std::size_t excluded = 0;  // records without a year
};

CenturySplit century_split(const std::vector<ExtractionRecord> &records);

struct GoldList {
  ConceptType concept_type = ConceptType::kResearchProblem;
  std::unordered_set<std::string> terms;  // normalized
};

// Same file format as the lexicon lists. Throws std::runtime_error when the
// file cannot be read.
GoldList load_gold_list(const std::filesystem::path &path, ConceptType type);

// Per-concept extracted terms, as produced by a corpus run.
using ExtractedTerms = std::map<ConceptType, std::vector<std::string>>;

ExtractedTerms extracted_terms(const std::vector<ExtractionRecord> &records);

// |distinct extracted ∩ gold| / |distinct extracted| for every concept with
// a gold list; nullopt when nothing was extracted for it.
std::map<ConceptType, std::optional<double>> precision_eval(
    const ExtractedTerms &extracted,
    const std::map<ConceptType, GoldList> &gold);

// |oracle ∩ extracted| / |oracle|; nullopt for an empty oracle.
std::optional<double> recall_eval(const std::vector<std::string> &extracted,
                                  const std::unordered_set<std::string> &oracle);

// Template counts read back from records, zeros included.
std::map<TemplateKind, std::size_t> coverage_from_records(
    const std::vector<ExtractionRecord> &records);

// Report renderers. `top` == 0 means no limit.
std::string render_frequencies_text(const FrequencyTable &table,
                                    std::size_t top);
std::string render_frequencies_ndjson(const FrequencyTable &table,
                                      std::size_t top);
std::string render_century_text(const CenturySplit &split, std::size_t top);
std::string render_century_ndjson(const CenturySplit &split, std::size_t top);
std::string render_coverage_text(
    const std::map<TemplateKind, std::size_t> &coverage);
std::string render_coverage_ndjson(
    const std::map<TemplateKind, std::size_t> &coverage);

// A metric cell: a value, "undefined" (empty denominator) or "n/a" (no
// reference list for the concept).
struct MetricCell {
  enum class State { kValue, kUndefined, kMissing };
  State state = State::kMissing;
  double value = 0.0;
};

using MetricReport = std::map<ConceptType, MetricCell>;

std::string render_metrics_text(const MetricReport &report,
                                std::string_view metric);
std::string render_metrics_ndjson(const MetricReport &report,
                                  std::string_view metric);

}  // namespace titleminer

#endif  // TITLEMINER_ANALYTICS_H_
