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

#include "titleminer/concept.h"

#include <algorithm>

namespace titleminer {

std::string_view concept_name(ConceptType type) {
  switch (type) {
    case ConceptType::kResearchProblem:
      return "research_problem";
    case ConceptType::kSolution:
      return "solution";
    case ConceptType::kResource:
      return "resource";
    case ConceptType::kLanguage:
      return "language";
    case ConceptType::kTool:
      return "tool";
    case ConceptType::kMethod:
      return "method";
  }
  return "unknown";
}

std::optional<ConceptType> concept_from_name(std::string_view name) {
  for (ConceptType type : kAllConcepts) {
    if (concept_name(type) == name) return type;
  }
  return std::nullopt;
}

bool TitleExpression::add(ConceptType type, std::string_view phrase) {
  if (phrase.empty() || contains(phrase)) return false;
  lists_[static_cast<std::size_t>(type)].emplace_back(phrase);
  return true;
}

void TitleExpression::merge(const TitleExpression &other) {
  for (ConceptType type : kAllConcepts) {
    for (const std::string &phrase : other.list(type)) add(type, phrase);
  }
}

std::optional<ConceptType> TitleExpression::type_of(
    std::string_view phrase) const {
  for (ConceptType type : kAllConcepts) {
    const auto &l = list(type);
    if (std::find(l.begin(), l.end(), phrase) != l.end()) return type;
  }
  return std::nullopt;
}

bool TitleExpression::empty() const { return size() == 0; }

std::size_t TitleExpression::size() const {
  std::size_t n = 0;
  for (const auto &l : lists_) n += l.size();
  return n;
}

ConceptSet TitleExpression::populated() const {
  ConceptSet set;
  for (ConceptType type : kAllConcepts) {
    if (!list(type).empty()) set.insert(type);
  }
  return set;
}

}  // namespace titleminer
