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

#ifndef TITLEMINER_CONCEPT_H_
#define TITLEMINER_CONCEPT_H_

#include <array>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace titleminer {

enum class ConceptType {
  kResearchProblem,
  kSolution,
  kResource,
  kLanguage,
  kTool,
  kMethod,
};

// Serialization order for records and reports.
inline constexpr std::array<ConceptType, 6> kAllConcepts = {
    ConceptType::kResearchProblem, ConceptType::kSolution,
    ConceptType::kResource,        ConceptType::kLanguage,
    ConceptType::kTool,            ConceptType::kMethod,
};

// Typing precedence for phrases without connectors. Solution never takes
// part in the sieve.
inline constexpr std::array<ConceptType, 5> kSievePrecedence = {
    ConceptType::kLanguage, ConceptType::kTool, ConceptType::kMethod,
    ConceptType::kResource, ConceptType::kResearchProblem,
};

// Stable wire names: research_problem, solution, resource, language, tool,
// method.
std::string_view concept_name(ConceptType type);
std::optional<ConceptType> concept_from_name(std::string_view name);

// Small bitset over concept types.
class ConceptSet {
 public:
  constexpr ConceptSet() = default;
  constexpr ConceptSet(std::initializer_list<ConceptType> types) {
    for (ConceptType t : types) bits_ |= bit(t);
  }

  constexpr void insert(ConceptType t) { bits_ |= bit(t); }
  constexpr bool contains(ConceptType t) const { return (bits_ & bit(t)) != 0; }
  // True when every member of this set is in `other`.
  constexpr bool subset_of(ConceptSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool operator==(const ConceptSet &) const = default;

 private:
  static constexpr unsigned bit(ConceptType t) {
    return 1u << static_cast<unsigned>(t);
  }
  unsigned bits_ = 0;
};

// The six concept lists extracted from one title. A phrase lives in at most
// one list; the first assignment wins.
class TitleExpression {
 public:
  const std::vector<std::string> &list(ConceptType type) const {
    return lists_[static_cast<std::size_t>(type)];
  }

  const std::vector<std::string> &research_problem() const {
    return list(ConceptType::kResearchProblem);
  }
  const std::vector<std::string> &solution() const {
    return list(ConceptType::kSolution);
  }
  const std::vector<std::string> &resource() const {
    return list(ConceptType::kResource);
  }
  const std::vector<std::string> &language() const {
    return list(ConceptType::kLanguage);
  }
  const std::vector<std::string> &tool() const {
    return list(ConceptType::kTool);
  }
  const std::vector<std::string> &method() const {
    return list(ConceptType::kMethod);
  }

  // Returns false, leaving the expression unchanged, when the phrase is
  // empty or already typed.
  bool add(ConceptType type, std::string_view phrase);

  // Adds every phrase of `other` in concept order.
  void merge(const TitleExpression &other);

  std::optional<ConceptType> type_of(std::string_view phrase) const;
  bool contains(std::string_view phrase) const {
    return type_of(phrase).has_value();
  }
  bool empty() const;
  std::size_t size() const;

  // Concepts with at least one phrase.
  ConceptSet populated() const;

  bool operator==(const TitleExpression &) const = default;

 private:
  std::array<std::vector<std::string>, 6> lists_;
};

}  // namespace titleminer

#endif  // TITLEMINER_CONCEPT_H_
