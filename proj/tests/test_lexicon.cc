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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "test_support.h"
#include "titleminer/lexicon.h"
#include "titleminer/text.h"

namespace titleminer {
namespace {

using testing::lexicon;

TEST_CASE("bundled lexicon loads with non-empty families") {
  const Lexicon &lex = lexicon();
  CHECK_FALSE(lex.tool_suffixes().empty());
  CHECK_FALSE(lex.resource_suffixes().empty());
  CHECK_FALSE(lex.method_suffixes().empty());
  CHECK_FALSE(lex.research_problem_suffixes().empty());
  CHECK_FALSE(lex.shared_task_patterns().empty());
  CHECK_FALSE(lex.non_content_phrases().empty());
  for (const char *name : {"Tigrigna", "Sundanese", "Balinese", "Dutch",
                           "English", "Chinese", "Japanese", "German",
                           "Arabic", "Ancient Accadian"}) {
    CHECK_MESSAGE(lex.is_language(name), name);
  }
}

TEST_CASE("ending") {
  const Lexicon &lex = lexicon();
  CHECK(ending("Parallel Hinglish Social Media Code-Mixed Corpus",
               lex.resource_suffixes()));
  CHECK(ending("A Grammar Testing Workbench", lex.tool_suffixes()));
  CHECK_THROWS_AS(ending("", lex.tool_suffixes()), std::invalid_argument);
  // Token aligned: "Corpus" inside a longer word does not count.
  CHECK_FALSE(ending("Subcorpusx", lex.resource_suffixes()));
  CHECK_FALSE(ending("Corpusing", lex.resource_suffixes()));
}

TEST_CASE("language gazetteer") {
  const Lexicon &lex = lexicon();
  CHECK(lex.is_language("Tigrigna"));
  CHECK(lex.is_language("Ancient Accadian"));
  CHECK(lex.is_language("dutch"));
  CHECK(lex.is_language("Modern Standard Arabic"));
  CHECK_FALSE(lex.is_language("Sentiment Analysis"));
  CHECK_FALSE(lex.is_language("Dutch Treebank"));
}

TEST_CASE("concept predicates") {
  const Lexicon &lex = lexicon();
  CHECK(lex.is_resource("Financial Microblogs and News"));
  CHECK(lex.is_method("A Semantic Methodology"));
  CHECK(lex.is_tool("Wordnets"));
  CHECK(lex.is_research_problem("Word Sense Discrimination"));
  CHECK(lex.is_resource("WordNet"));
  CHECK_FALSE(lex.is_tool("WordNet"));
  CHECK_FALSE(lex.is_method("Zyzzyva Floop"));
  CHECK(lex.is_shared_task("SemEval-2017 Task 5"));
  CHECK_FALSE(lex.is_shared_task("SemEval-2017 Task 5 Systems"));
}

TEST_CASE("has_special_case_word") {
  const Lexicon &lex = lexicon();
  CHECK(lex.has_special_case_word("SNOPAR: A Grammar Testing System"));
  CHECK(lex.has_special_case_word("CIRCSIM-Tutor: An Intelligent Tutor"));
  CHECK(lex.has_special_case_word("WordNet2: Something"));
  CHECK(lex.has_special_case_word("Moses: Open Source Toolkit"));
  CHECK_FALSE(lex.has_special_case_word(
      "Working on the Italian Machine Dictionary: A Semantic Approach"));
  CHECK_FALSE(lex.has_special_case_word("No Colon Here"));
  CHECK_FALSE(lex.has_special_case_word("Parsing: Problems and Prospects"));
}

TEST_CASE("non-content phrases") {
  const Lexicon &lex = lexicon();
  CHECK(lex.non_content_phrase("A Semantic Approach"));
  CHECK(lex.non_content_phrase("Recent Developments and Results"));
  CHECK(lex.non_content_phrase("  an overview. "));
  CHECK_FALSE(lex.non_content_phrase("Neural Machine Translation"));
  CHECK(lex.non_content_prefix("An Overview of the Penn Treebank") ==
        std::string("An Overview").size());
  CHECK(lex.non_content_prefix("Overviewing Parsers") == 0);
  CHECK(lex.non_content_prefix("Neural Parsing") == 0);
}

TEST_CASE("predicates ignore case") {
  const Lexicon &lex = lexicon();
  for (const char *phrase : {"Financial Microblogs and News", "Word Sense Discrimination",
                             "A Grammar Testing Workbench", "Ancient Accadian",
                             "A Semantic Methodology", "Zyzzyva Floop"}) {
    std::string lower = to_lower(phrase);
    std::string upper;
    for (char c : lower) upper += (c >= 'a' && c <= 'z') ? char(c - 32) : c;
    for (const std::string &v : {lower, upper}) {
      CHECK(lex.is_language(v) == lex.is_language(phrase));
      CHECK(lex.is_tool(v) == lex.is_tool(phrase));
      CHECK(lex.is_method(v) == lex.is_method(phrase));
      CHECK(lex.is_resource(v) == lex.is_resource(phrase));
      CHECK(lex.is_research_problem(v) == lex.is_research_problem(phrase));
    }
  }
}

TEST_CASE("suffix predicates ignore leading context") {
  const Lexicon &lex = lexicon();
  for (const char *phrase : {"Corpus", "Treebanks", "Parsers", "Translation",
                             "Models", "Word Embeddings"}) {
    for (const char *prefix : {"", "Large ", "Very Large Multilingual ",
                               "Code-Mixed "}) {
      std::string longer = std::string(prefix) + phrase;
      CHECK(lex.is_tool(longer) == lex.is_tool(phrase));
      CHECK(lex.is_resource(longer) == lex.is_resource(phrase));
      CHECK(lex.is_method(longer) == lex.is_method(phrase));
      CHECK(lex.is_research_problem(longer) ==
            lex.is_research_problem(phrase));
    }
  }
}

TEST_CASE("from_sources rejects bad entries") {
  LexiconSources sources = testing::bundled_sources();

  SUBCASE("missing file") {
    sources.erase("tool_suffixes.txt");
    CHECK_THROWS_AS(Lexicon::from_sources(sources), LexiconError);
  }
  SUBCASE("bad regex names the file") {
    sources["method_suffixes.txt"] += "\nmodels(\n";
    try {
      Lexicon::from_sources(sources);
      FAIL("expected LexiconError");
    } catch (const LexiconError &e) {
      CHECK(e.file() == "method_suffixes.txt");
    }
  }
  SUBCASE("pattern matching the empty string") {
    sources["tool_suffixes.txt"] += "\n(systems)?\n";
    CHECK_THROWS_AS(Lexicon::from_sources(sources), LexiconError);
  }
  SUBCASE("empty family") {
    sources["resource_suffixes.txt"] = "# nothing\n";
    CHECK_THROWS_AS(Lexicon::from_sources(sources), LexiconError);
  }
  SUBCASE("unknown directive") {
    sources["research_problem_suffixes.txt"] += "\n@bogus x\n";
    CHECK_THROWS_AS(Lexicon::from_sources(sources), LexiconError);
  }
}

TEST_CASE("load reports the offending path") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "titleminer_bad_lexicon";
  fs::remove_all(dir);
  fs::create_directories(dir);
  for (const char *name : kLexiconFiles) {
    fs::copy_file(testing::lexicon_dir() / name, dir / name);
  }
  std::ofstream(dir / "tool_suffixes.txt", std::ios::app) << "\n[unclosed\n";
  try {
    Lexicon::load(dir);
    FAIL("expected LexiconError");
  } catch (const LexiconError &e) {
    CHECK(e.file() == (dir / "tool_suffixes.txt").string());
  }
  CHECK_THROWS_AS(Lexicon::load(dir / "missing"), LexiconError);
  fs::remove_all(dir);
}

TEST_CASE("environment override of the lexicon directory") {
  ::setenv("TITLE_MINER_LEXICON", "/some/where", 1);
  CHECK(default_lexicon_dir() == std::filesystem::path("/some/where"));
  ::unsetenv("TITLE_MINER_LEXICON");
  CHECK(std::filesystem::is_directory(default_lexicon_dir()));
}

}  // namespace
}  // namespace titleminer
