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

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "test_support.h"
#include "titleminer/analytics.h"

namespace titleminer {
namespace {

std::vector<ExtractionRecord> fixture() {
  return read_records(
      testing::read_file(testing::data_path("analytics_records.ndjson")));
}

ExtractionRecord record_with(ConceptType type, const std::string &phrase,
                             std::optional<int> year) {
  ExtractionRecord r;
  r.title = {phrase, year, ""};
  r.expression.add(type, phrase);
  return r;
}

TEST_CASE("frequencies") {
  CHECK(concept_frequencies({}).empty());

  auto table = concept_frequencies(
      {record_with(ConceptType::kResearchProblem, "Machine Translation", 1990),
       record_with(ConceptType::kResearchProblem, "machine  translation", {})});
  REQUIRE(table.size() == 1);
  CHECK(table[ConceptType::kResearchProblem] ==
        RankedTerms{{"machine translation", 2}});

  table = concept_frequencies(fixture());
  CHECK(table[ConceptType::kResearchProblem] ==
        RankedTerms{{"machine translation", 2}, {"parsing", 1}});
  CHECK(table[ConceptType::kTool] == RankedTerms{{"word embeddings", 2}});
  // Ties are ordered lexicographically.
  CHECK(table[ConceptType::kSolution] ==
        RankedTerms{{"a grammar testing system", 1},
                    {"building wordnets", 1},
                    {"improving", 1},
                    {"snopar", 1}});
}

TEST_CASE("frequencies do not depend on record order") {
  auto records = fixture();
  auto base = concept_frequencies(records);
  std::mt19937 rng(2);
  for (int i = 0; i < 20; ++i) {
    std::shuffle(records.begin(), records.end(), rng);
    CHECK(concept_frequencies(records) == base);
  }
}

TEST_CASE("century split") {
  auto split = century_split(
      {record_with(ConceptType::kResource, "Penn Treebank", 1995),
       record_with(ConceptType::kResource, "Penn Treebank", 2015)});
  const auto &buckets = split.tables[ConceptType::kResource].buckets;
  CHECK(buckets.at(kTwentiethCentury) == RankedTerms{{"penn treebank", 1}});
  CHECK(buckets.at(kTwentyFirstCentury) == RankedTerms{{"penn treebank", 1}});

  split = century_split({record_with(ConceptType::kTool, "Parsers", {}),
                         record_with(ConceptType::kTool, "Taggers", {})});
  CHECK(split.excluded == 2);
  for (const auto &[type, table] : split.tables) {
    for (const auto &[label, terms] : table.buckets) CHECK(terms.empty());
  }

  auto records = fixture();
  split = century_split(records);
  CHECK(split.titles_20th == 3);
  CHECK(split.titles_21st == 3);
  CHECK(split.titles_20th + split.titles_21st + split.excluded ==
        records.size());
}

TEST_CASE("year boundaries") {
  auto split = century_split(
      {record_with(ConceptType::kMethod, "Models", 2000),
       record_with(ConceptType::kMethod, "Models", 2001)});
  CHECK(split.titles_20th == 1);
  CHECK(split.titles_21st == 1);
}

TEST_CASE("precision") {
  std::map<ConceptType, GoldList> gold;
  gold[ConceptType::kTool] = {ConceptType::kTool, {"a"}};
  auto p = precision_eval({{ConceptType::kTool, {"a", "b"}}}, gold);
  CHECK(p[ConceptType::kTool] == doctest::Approx(0.5));

  p = precision_eval({{ConceptType::kTool, {"a", "A", " a "}}}, gold);
  CHECK(p[ConceptType::kTool] == doctest::Approx(1.0));

  // No extractions: undefined rather than zero.
  p = precision_eval({}, gold);
  CHECK_FALSE(p[ConceptType::kTool].has_value());
  // Concepts without a gold list are not reported.
  CHECK(p.count(ConceptType::kMethod) == 0);
}

TEST_CASE("recall") {
  CHECK(recall_eval({"x"}, {"x", "y"}) == doctest::Approx(0.5));
  CHECK(recall_eval({"x", "y", "z"}, {"x", "y"}) == doctest::Approx(1.0));
  CHECK_FALSE(recall_eval({"x"}, {}).has_value());
  CHECK(recall_eval({}, {"x"}) == doctest::Approx(0.0));
}

TEST_CASE("gold lists load like lexicon files") {
  GoldList gold = load_gold_list(
      testing::data_path("gold_full/resource.txt"), ConceptType::kResource);
  CHECK(gold.terms == std::unordered_set<std::string>{"web corpora", "wordnet"});
  CHECK_THROWS(load_gold_list(testing::data_path("gold_full/nope.txt"),
                              ConceptType::kTool));
}

TEST_CASE("coverage from records") {
  auto coverage = coverage_from_records(fixture());
  CHECK(coverage.size() == 9);
  CHECK(coverage[TemplateKind::kDefault] == 4);
  CHECK(coverage[TemplateKind::kSpecialWordColon] == 1);
  CHECK(coverage[TemplateKind::kAppliedTo] == 0);
}

TEST_CASE("renders match golden files") {
  auto records = fixture();
  auto golden = [](const char *name) {
    return testing::read_file(testing::data_path(name));
  };
  auto freq = concept_frequencies(records);
  CHECK(render_frequencies_text(freq, 0) == golden("analytics.frequencies.txt"));
  CHECK(render_frequencies_ndjson(freq, 2) ==
        golden("analytics.frequencies.top2.ndjson"));
  auto split = century_split(records);
  CHECK(render_century_text(split, 0) == golden("analytics.century.txt"));
  CHECK(render_century_ndjson(split, 0) == golden("analytics.century.ndjson"));
  auto coverage = coverage_from_records(records);
  CHECK(render_coverage_text(coverage) == golden("analytics.coverage.txt"));
  CHECK(render_coverage_ndjson(coverage) == golden("analytics.coverage.ndjson"));
}

TEST_CASE("empty inputs render empty tables") {
  CHECK(render_frequencies_text({}, 5).empty());
  CHECK(render_frequencies_ndjson({}, 5).empty());
}

TEST_CASE("top limits each ranking") {
  ExtractionRecord r;
  for (const char *t : {"aa", "bb", "cc", "dd", "ee", "ff", "gg"}) {
    r.expression.add(ConceptType::kMethod, t);
  }
  auto table = concept_frequencies({r});
  std::string text = render_frequencies_ndjson(table, 5);
  CHECK(std::count(text.begin(), text.end(), '\n') == 5);
  text = render_frequencies_ndjson(table, 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 7);
}

TEST_CASE("metric report renders") {
  MetricReport report;
  report[ConceptType::kTool] = {MetricCell::State::kValue, 0.834};
  report[ConceptType::kMethod] = {MetricCell::State::kUndefined, 0.0};
  report[ConceptType::kLanguage] = {MetricCell::State::kMissing, 0.0};
  std::string text = render_metrics_text(report, "precision");
  CHECK(text ==
        "concept           precision\n"
        "language          n/a\n"
        "tool              83.40%\n"
        "method            undefined\n");
}

}  // namespace
}  // namespace titleminer
