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

#ifndef TITLEMINER_TEMPLATES_H_
#define TITLEMINER_TEMPLATES_H_

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "titleminer/corpus.h"
#include "titleminer/lexicon.h"

namespace titleminer {

// Title templates in precedence order; the first matching rule wins.
enum class TemplateKind {
  kSpecialWordColon = 1,    // "SNOPAR: ..."
  kUsingPrefix = 2,         // "Using ..."
  kColonCaseStudy = 3,      // "... : [a ]case study ..."
  kCaseStudyContained = 4,  // "... [a ]case study ..."
  kColonGeneric = 5,        // "... : ..."
  kAppliedTo = 6,           // "... applied to ..."
  kNonContentPrefix = 7,    // "Overview of ...", "A Study on ..."
  kDescriptionOf = 8,       // "Description of ..."
  kDefault = 9,
};

inline constexpr std::array<TemplateKind, 9> kAllTemplates = {
    TemplateKind::kSpecialWordColon,   TemplateKind::kUsingPrefix,
    TemplateKind::kColonCaseStudy,     TemplateKind::kCaseStudyContained,
    TemplateKind::kColonGeneric,       TemplateKind::kAppliedTo,
    TemplateKind::kNonContentPrefix,   TemplateKind::kDescriptionOf,
    TemplateKind::kDefault,
};

inline int rule_number(TemplateKind kind) { return static_cast<int>(kind); }

std::string_view template_name(TemplateKind kind);
std::optional<TemplateKind> template_from_name(std::string_view name);

// Routing decision for one title. split_points are strictly increasing byte
// offsets into the title text:
//   SpecialWordColon, ColonGeneric  {colon}
//   UsingPrefix                     {end of "Using"}
//   ColonCaseStudy                  {colon, anchor begin, anchor end}
//   CaseStudyContained, AppliedTo   {anchor begin, anchor end}
//   NonContentPrefix, DescriptionOf {end of prefix}
//   Default                         {}
// The case-study anchor covers "[a ]case study" plus a following
// of/on/in/for/from/with.
struct TemplateClass {
  TemplateKind kind = TemplateKind::kDefault;
  std::vector<std::size_t> split_points;

  bool operator==(const TemplateClass &) const = default;
};

TemplateClass classify(std::string_view title, const Lexicon &lexicon);

inline TemplateClass classify(const Title &title, const Lexicon &lexicon) {
  return classify(title.text, lexicon);
}

// Titles routed to each template. Every kind is present, zeros included.
std::map<TemplateKind, std::size_t> rule_coverage(
    const std::vector<Title> &corpus, const Lexicon &lexicon);

}  // namespace titleminer

#endif  // TITLEMINER_TEMPLATES_H_
