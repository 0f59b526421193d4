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
#include "titleminer/pipeline.h"
#include "titleminer/typer.h"

namespace titleminer {
namespace {

using testing::lexicon;
using Strings = std::vector<std::string>;

TitleExpression typed(const std::string &title) {
  return parse_title({title, std::nullopt, ""}, lexicon()).expression;
}

TEST_CASE("branch table") {
  CHECK(branch_for(Connector::kUsing) == Branch::kUsingWithBy);
  CHECK(branch_for(Connector::kWith) == Branch::kUsingWithBy);
  CHECK(branch_for(Connector::kBy) == Branch::kUsingWithBy);
  CHECK(branch_for(Connector::kVia) == Branch::kThroughVia);
  CHECK(branch_for(Connector::kThrough) == Branch::kThroughVia);
  CHECK(branch_signature(Branch::kFrom) ==
        ConceptSet{ConceptType::kSolution, ConceptType::kResource});
  CHECK(branch_signature(Branch::kTo) ==
        ConceptSet{ConceptType::kResearchProblem, ConceptType::kSolution,
                   ConceptType::kResource, ConceptType::kLanguage,
                   ConceptType::kTool, ConceptType::kMethod});
  CHECK_FALSE(branch_signature(Branch::kUsingWithBy)
                  .contains(ConceptType::kResearchProblem));
}

TEST_CASE("five-way sieve") {
  auto e = five_way_concept_typing("Ancient Accadian", lexicon());
  CHECK(e.language() == Strings{"Ancient Accadian"});
  CHECK(e.size() == 1);

  e = five_way_concept_typing("Financial Microblogs and News", lexicon());
  CHECK(e.resource() == Strings{"Financial Microblogs and News"});
  CHECK(e.size() == 1);

  CHECK(five_way_concept_typing("Zyzzyva Floop", lexicon()).empty());

  // Both tool and resource suffixes apply; tool comes first.
  e = five_way_concept_typing("Corpus Workbench", lexicon());
  CHECK(e.tool() == Strings{"Corpus Workbench"});
  CHECK(e.size() == 1);

  CHECK_THROWS_AS(five_way_concept_typing("Parsing of Tweets", lexicon()),
                  std::invalid_argument);
  CHECK_THROWS_AS(five_way_concept_typing("", lexicon()),
                  std::invalid_argument);
}

TEST_CASE("fallthrough option") {
  TyperOptions options;
  options.fallthrough_research_problem = true;
  auto e = five_way_concept_typing("Zyzzyva Floop", lexicon(), options);
  CHECK(e.research_problem() == Strings{"Zyzzyva Floop"});
  // Matching phrases are unaffected.
  e = five_way_concept_typing("Ancient Accadian", lexicon(), options);
  CHECK(e.language() == Strings{"Ancient Accadian"});
  CHECK(e.size() == 1);
}

TEST_CASE("one-connector heuristics") {
  auto e = one_connector_heuristics(
      "Adding Pronunciation Information to Wordnets", lexicon());
  CHECK(e.solution() == Strings{"Adding Pronunciation Information"});
  CHECK(e.tool() == Strings{"Wordnets"});
  CHECK(e.size() == 2);

  e = one_connector_heuristics("Learning Templates from Web Corpora", lexicon());
  CHECK(e.solution() == Strings{"Learning Templates"});
  CHECK(e.resource() == Strings{"Web Corpora"});
  CHECK(e.size() == 2);

  e = one_connector_heuristics(
      "A Grapheme-to-Phoneme Conversion System for Dutch", lexicon());
  CHECK(e.language() == Strings{"Dutch"});

  CHECK_THROWS_AS(one_connector_heuristics("Neural Parsing", lexicon()),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      one_connector_heuristics("Parsing of Tweets for Search", lexicon()),
      std::invalid_argument);
}

TEST_CASE("one-connector output respects the branch signature") {
  const Strings sides = {"Neural Models",  "Word Sense Disambiguation",
                         "German",         "Parallel Corpora",
                         "Parsing Tools",  "Building Lexicons",
                         "Zyzzyva Floop",  "A Tagger"};
  for (Connector c : kAllConnectors) {
    for (const std::string &left : sides) {
      for (const std::string &right : sides) {
        std::string phrase =
            left + " " + std::string(connector_name(c)) + " " + right;
        auto e = one_connector_heuristics(phrase, lexicon());
        CHECK_MESSAGE(e.populated().subset_of(branch_signature(branch_for(c))),
                      phrase);
      }
    }
  }
}

TEST_CASE("multi-connector typing") {
  auto e = multi_connector_typing(split_on_connectors("A of B for C in Tigrigna"),
                                  lexicon());
  CHECK(e.language() == Strings{"Tigrigna"});

  e = multi_connector_typing(
      split_on_connectors("Parsing of Tweets with Neural Models in German"),
      lexicon());
  CHECK(e.language() == Strings{"German"});
  CHECK(e.method() == Strings{"Neural Models"});

  CHECK_THROWS_AS(
      multi_connector_typing(split_on_connectors("Tagging for Tweets"),
                             lexicon()),
      std::invalid_argument);
}

TEST_CASE("template typing of the worked examples") {
  auto e = typed(
      "SemEval-2017 Task 5: Fine-Grained Sentiment Analysis on Financial "
      "Microblogs and News");
  CHECK(e.research_problem() == Strings{"SemEval-2017 Task 5"});
  CHECK(e.method() == Strings{"Fine-Grained Sentiment Analysis"});
  CHECK(e.resource() == Strings{"Financial Microblogs and News"});
  CHECK(e.size() == 3);

  e = typed("Working on the Italian Machine Dictionary: A Semantic Approach");
  CHECK_FALSE(e.contains("A Semantic Approach"));

  e = typed("MDWOZ: A Wizard of Oz Environment for Dialog Systems Development");
  CHECK(e.solution() == Strings{"MDWOZ", "A Wizard of Oz Environment"});
  CHECK(e.research_problem() == Strings{"Dialog Systems Development"});

  e = typed("Using Multiple Knowledge Sources for Word Sense Discrimination");
  CHECK(e.resource() == Strings{"Multiple Knowledge Sources"});
  CHECK(e.research_problem() == Strings{"Word Sense Discrimination"});

  e = typed("Using WordNet for Building WordNets");
  CHECK(e.resource() == Strings{"WordNet"});
  CHECK(e.solution() == Strings{"Building WordNets"});
}

TEST_CASE("other templates") {
  auto e = typed("Specialized Information Extraction: Automatic Chemical "
                 "Reaction Coding From English Descriptions");
  CHECK(e.research_problem() == Strings{"Specialized Information Extraction"});
  CHECK(e.resource() == Strings{"English Descriptions"});

  e = typed("Constraint Grammar Applied to Swedish Morphology");
  CHECK(e.method() == Strings{"Constraint Grammar"});

  e = typed("An Overview of the Penn Discourse Treebank");
  CHECK(e.resource() == Strings{"the Penn Discourse Treebank"});
  CHECK_FALSE(e.contains("An Overview"));

  e = typed("Morphological Analysis as a Case Study in Finite-State Methods");
  CHECK(e.method() == Strings{"Morphological Analysis"});
  CHECK(e.research_problem() == Strings{"Finite-State Methods"});

  e = typed("Grammar Engineering: A Case Study on Breton");
  CHECK(e.language() == Strings{"Breton"});

  CHECK(typed("Zq Vb").empty());
}

TEST_CASE("single typing and verbatim phrases on generated titles") {
  const Strings parts = {"Neural",  "Parsing",  "of",      "Tweets",
                         "for",     "German",   "Corpus",  "with",
                         "Models",  "Using",    ":",       "Machine",
                         "Translation", "to",   "Toolkit", "in",
                         "a case study", "applied to", "Overview"};
  std::mt19937 rng(3);
  for (int round = 0; round < 1000; ++round) {
    std::string title;
    std::size_t n = 1 + rng() % 10;
    for (std::size_t i = 0; i < n; ++i) {
      if (i) title += " ";
      title += parts[rng() % parts.size()];
    }
    auto record = parse_title({title, std::nullopt, ""}, lexicon());
    CHECK(record.error.empty());
    std::vector<std::string> seen;
    for (ConceptType type : kAllConcepts) {
      for (const std::string &p : record.expression.list(type)) {
        CHECK_MESSAGE(title.find(p) != std::string::npos, title);
        CHECK(std::find(seen.begin(), seen.end(), p) == seen.end());
        seen.push_back(p);
      }
    }
  }
}

}  // namespace
}  // namespace titleminer
