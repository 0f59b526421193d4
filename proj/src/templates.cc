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

#include "titleminer/templates.h"

#include <regex>

#include "titleminer/text.h"

namespace titleminer {

namespace {

using SvMatch = std::match_results<std::string_view::const_iterator>;

constexpr auto kFlags = std::regex::ECMAScript | std::regex::icase;

const std::regex &case_study_at_start() {
  static const std::regex re(
      R"(^\s*((?:a )?case stud(?:y|ies)(?: (?:of|on|in|for|from|with))?)(?![A-Za-z0-9]))",
      kFlags);
  return re;
}

const std::regex &case_study_anywhere() {
  static const std::regex re(
      R"((?:^|[^A-Za-z0-9])((?:a )?case stud(?:y|ies)(?: (?:of|on|in|for|from|with))?)(?![A-Za-z0-9]))",
      kFlags);
  return re;
}

const std::regex &applied_to() {
  static const std::regex re(R"((?:^|[^A-Za-z0-9])(applied to)(?![A-Za-z0-9]))",
                             kFlags);
  return re;
}

const std::regex &using_prefix() {
  static const std::regex re(R"(^using\s)", kFlags);
  return re;
}

const std::regex &description_of() {
  static const std::regex re(R"(^description of(?![A-Za-z0-9]))", kFlags);
  return re;
}

// Span of capture group 1, shifted by `base`.
std::vector<std::size_t> group_span(const SvMatch &m, std::size_t base) {
  std::size_t begin = base + static_cast<std::size_t>(m.position(1));
  return {begin, begin + static_cast<std::size_t>(m.length(1))};
}

}  // namespace

std::string_view template_name(TemplateKind kind) {
  switch (kind) {
    case TemplateKind::kSpecialWordColon:
      return "SpecialWordColon";
    case TemplateKind::kUsingPrefix:
      return "UsingPrefix";
    case TemplateKind::kColonCaseStudy:
      return "ColonCaseStudy";
    case TemplateKind::kCaseStudyContained:
      return "CaseStudyContained";
    case TemplateKind::kColonGeneric:
      return "ColonGeneric";
    case TemplateKind::kAppliedTo:
      return "AppliedTo";
    case TemplateKind::kNonContentPrefix:
      return "NonContentPrefix";
    case TemplateKind::kDescriptionOf:
      return "DescriptionOf";
    case TemplateKind::kDefault:
      return "Default";
  }
  return "Default";
}

std::optional<TemplateKind> template_from_name(std::string_view name) {
  for (TemplateKind kind : kAllTemplates) {
    if (template_name(kind) == name) return kind;
  }
  return std::nullopt;
}

TemplateClass classify(std::string_view title, const Lexicon &lexicon) {
  const std::size_t colon = title.find(':');
  const bool has_colon = colon != std::string_view::npos;
  SvMatch m;

  if (has_colon && lexicon.has_special_case_word(title)) {
    return {TemplateKind::kSpecialWordColon, {colon}};
  }
  if (std::regex_search(title.begin(), title.end(), using_prefix())) {
    return {TemplateKind::kUsingPrefix, {5}};
  }
  if (has_colon) {
    std::string_view post = title.substr(colon + 1);
    if (std::regex_search(post.begin(), post.end(), m, case_study_at_start())) {
      auto span = group_span(m, colon + 1);
      return {TemplateKind::kColonCaseStudy, {colon, span[0], span[1]}};
    }
  }
  if (std::regex_search(title.begin(), title.end(), m, case_study_anywhere())) {
    return {TemplateKind::kCaseStudyContained, group_span(m, 0)};
  }
  if (has_colon) return {TemplateKind::kColonGeneric, {colon}};
  if (std::regex_search(title.begin(), title.end(), m, applied_to())) {
    return {TemplateKind::kAppliedTo, group_span(m, 0)};
  }
  if (std::size_t len = lexicon.non_content_prefix(title); len > 0) {
    return {TemplateKind::kNonContentPrefix, {len}};
  }
  if (std::regex_search(title.begin(), title.end(), m, description_of())) {
    return {TemplateKind::kDescriptionOf,
            {static_cast<std::size_t>(m.length(0))}};
  }
  return {TemplateKind::kDefault, {}};
}

std::map<TemplateKind, std::size_t> rule_coverage(
    const std::vector<Title> &corpus, const Lexicon &lexicon) {
  std::map<TemplateKind, std::size_t> counts;
  for (TemplateKind kind : kAllTemplates) counts[kind] = 0;
  for (const Title &title : corpus) ++counts[classify(title, lexicon).kind];
  return counts;
}

}  // namespace titleminer
