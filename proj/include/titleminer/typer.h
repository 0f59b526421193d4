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

#ifndef TITLEMINER_TYPER_H_
#define TITLEMINER_TYPER_H_

#include <array>
#include <optional>
#include <string_view>

#include "titleminer/concept.h"
#include "titleminer/connectors.h"
#include "titleminer/corpus.h"
#include "titleminer/lexicon.h"
#include "titleminer/templates.h"

namespace titleminer {

struct TyperOptions {
  // Type phrases that match no predicate as research problems instead of
  // leaving them untyped.
  bool fallthrough_research_problem = false;
};

// One-connector heuristics, one per connector family.
enum class Branch {
  kFor,
  kOf,
  kUsingWithBy,
  kOn,
  kFrom,
  kIn,
  kThroughVia,
  kTo,
  kAs,
};

inline constexpr std::array<Branch, 9> kAllBranches = {
    Branch::kFor,  Branch::kOf,         Branch::kUsingWithBy,
    Branch::kOn,   Branch::kFrom,       Branch::kIn,
    Branch::kThroughVia, Branch::kTo,   Branch::kAs,
};

Branch branch_for(Connector connector);
std::string_view branch_name(Branch branch);

// The concepts a branch is allowed to populate.
ConceptSet branch_signature(Branch branch);

// Sieve over a phrase without connectors: the first of language, tool,
// method, resource, research problem whose predicate holds. Throws
// std::invalid_argument if the phrase is empty or contains a connector.
TitleExpression five_way_concept_typing(std::string_view phrase,
                                        const Lexicon &lexicon,
                                        const TyperOptions &options = {});

// Types "left <connector> right" with the branch for its only connector.
// Throws std::invalid_argument unless the phrase has exactly one connector.
TitleExpression one_connector_heuristics(std::string_view phrase,
                                         const Lexicon &lexicon);

// Right-to-left fold over a chunk with two or more connectors. "X of Y"
// spans are first joined into noun groups; the last group goes through the
// five-way sieve, then each connector's branch types the pair around it.
// Earlier assignments are never overwritten. Throws std::invalid_argument
// on fewer than two connectors.
TitleExpression multi_connector_typing(const ChunkedPhrase &chunk,
                                       const Lexicon &lexicon,
                                       const TyperOptions &options = {});

// Template-specific extraction for a classified title.
TitleExpression type_template(const Title &title,
                              const TemplateClass &template_class,
                              const Lexicon &lexicon,
                              const TyperOptions &options = {});

}  // namespace titleminer

#endif  // TITLEMINER_TYPER_H_
