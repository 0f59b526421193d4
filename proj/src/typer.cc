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

#include "titleminer/typer.h"

#include <stdexcept>
#include <string>
#include <unordered_set>

#include "titleminer/text.h"

namespace titleminer {

namespace {

using CT = ConceptType;

// Characters stripped from the edges of every extracted phrase.
constexpr std::string_view kPhraseEdges = " \t,;:.!?\"'-";

std::string_view clean(std::string_view phrase) {
  return trim_chars(phrase, kPhraseEdges);
}

bool holds(CT type, std::string_view phrase, const Lexicon &lex) {
  switch (type) {
    case CT::kLanguage:
      return lex.is_language(phrase);
    case CT::kTool:
      return lex.is_tool(phrase);
    case CT::kMethod:
      return lex.is_method(phrase);
    case CT::kResource:
      return lex.is_resource(phrase);
    case CT::kResearchProblem:
      return lex.is_research_problem(phrase);
    case CT::kSolution:
      return false;
  }
  return false;
}

std::optional<CT> sieve(std::string_view phrase, ConceptSet allowed,
                        const Lexicon &lex) {
  for (CT type : kSievePrecedence) {
    if (allowed.contains(type) && holds(type, phrase, lex)) return type;
  }
  return std::nullopt;
}

constexpr ConceptSet kFiveWay = {CT::kLanguage, CT::kTool, CT::kMethod,
                                 CT::kResource, CT::kResearchProblem};

// Five-way sieve without the connector precondition; noun groups such as
// "A Wizard of Oz Environment" go through here.
TitleExpression five_way(std::string_view phrase, const Lexicon &lex,
                         const TyperOptions &options) {
  TitleExpression expr;
  phrase = clean(phrase);
  if (phrase.empty()) return expr;
  if (auto type = sieve(phrase, kFiveWay, lex)) {
    expr.add(*type, phrase);
  } else if (options.fallthrough_research_problem) {
    expr.add(CT::kResearchProblem, phrase);
  }
  return expr;
}

bool is_gerund_initial(std::string_view phrase) {
  static const std::unordered_set<std::string> kNotGerunds = {
      "during",  "nothing", "something", "anything", "everything",
      "morning", "evening", "string",    "spring",   "ceiling",
      "wedding", "sibling", "herring",   "pudding",  "sterling",
  };
  auto tokens = tokenize(phrase);
  if (tokens.size() < 2) return false;
  std::string first = to_lower(tokens[0].text);
  if (first.size() < 5 || !first.ends_with("ing")) return false;
  for (char c : first) {
    if (!is_ascii_alpha(c)) return false;
  }
  return !kNotGerunds.contains(first);
}

bool is_article_initial(std::string_view phrase) {
  auto tokens = tokenize(phrase);
  if (tokens.size() < 2) return false;
  std::string first = to_lower(tokens[0].text);
  return first == "a" || first == "an" || first == "the";
}

struct SideRule {
  ConceptSet sieve;
  bool gerund_first = false;     // gerund-led phrase is a solution, sieve skipped
  bool solution_default = false; // gerund- or article-led phrase left over
  std::optional<CT> fallback;
};

struct BranchRule {
  SideRule left;
  SideRule right;
};

const BranchRule &rule_for(Branch branch) {
  static const BranchRule kFor{
      {{CT::kResource, CT::kResearchProblem}, true, true, {}},
      {{CT::kLanguage, CT::kResource, CT::kResearchProblem}, false, true, {}}};
  static const BranchRule kOf{
      {{CT::kTool, CT::kResource}, true, true, {}},
      {{CT::kLanguage, CT::kTool, CT::kResource, CT::kResearchProblem},
       false, false, {}}};
  static const BranchRule kUsingWithBy{
      {{}, true, true, {}},
      {{CT::kLanguage, CT::kTool, CT::kMethod, CT::kResource}, false, false,
       {}}};
  static const BranchRule kOn{
      {{}, true, true, {}},
      {{CT::kLanguage, CT::kResource, CT::kResearchProblem}, false, false, {}}};
  static const BranchRule kFrom{{{}, false, false, CT::kSolution},
                                {{}, false, false, CT::kResource}};
  static const BranchRule kIn{
      {{CT::kTool, CT::kResource, CT::kResearchProblem}, true, true, {}},
      {{CT::kLanguage, CT::kResource, CT::kResearchProblem}, false, false, {}}};
  static const BranchRule kThroughVia{
      {{CT::kResearchProblem}, true, true, {}},
      {{CT::kMethod, CT::kResource}, false, false, {}}};
  static const BranchRule kTo{
      {{CT::kTool, CT::kMethod, CT::kResource, CT::kResearchProblem}, true,
       true, {}},
      {{CT::kLanguage, CT::kTool, CT::kMethod, CT::kResource,
        CT::kResearchProblem},
       false, true, {}}};
  static const BranchRule kAs{
      {{CT::kMethod, CT::kResource, CT::kResearchProblem}, true, true, {}},
      {{CT::kMethod, CT::kResource, CT::kResearchProblem}, false, false, {}}};
  switch (branch) {
    case Branch::kFor:
      return kFor;
    case Branch::kOf:
      return kOf;
    case Branch::kUsingWithBy:
      return kUsingWithBy;
    case Branch::kOn:
      return kOn;
    case Branch::kFrom:
      return kFrom;
    case Branch::kIn:
      return kIn;
    case Branch::kThroughVia:
      return kThroughVia;
    case Branch::kTo:
      return kTo;
    case Branch::kAs:
      return kAs;
  }
  return kTo;
}

std::optional<CT> type_side(std::string_view phrase, const SideRule &rule,
                            const Lexicon &lex) {
  if (rule.gerund_first && is_gerund_initial(phrase)) return CT::kSolution;
  if (auto type = sieve(phrase, rule.sieve, lex)) return type;
  if (rule.solution_default &&
      (is_gerund_initial(phrase) || is_article_initial(phrase))) {
    return CT::kSolution;
  }
  return rule.fallback;
}

// Either side may be empty when its connector was degenerate.
TitleExpression apply_branch(Branch branch, std::string_view left,
                             std::string_view right, const Lexicon &lex) {
  const BranchRule &rule = rule_for(branch);
  const ConceptSet signature = branch_signature(branch);
  TitleExpression expr;
  left = clean(left);
  right = clean(right);
  if (!left.empty()) {
    auto type = type_side(left, rule.left, lex);
    if (type && signature.contains(*type)) expr.add(*type, left);
  }
  if (!right.empty()) {
    auto type = type_side(right, rule.right, lex);
    if (type && signature.contains(*type)) expr.add(*type, right);
  }
  return expr;
}

// Joins the leading "X of Y of Z" run into one head group.
ChunkedPhrase merge_head(const ChunkedPhrase &chunk) {
  std::size_t k = 0;
  while (k < chunk.connectors.size() &&
         chunk.connectors[k] == Connector::kOf) {
    ++k;
  }
  if (k == 0) return chunk;
  ChunkedPhrase out;
  out.source = chunk.source;
  out.dropped = chunk.dropped;
  const Segment &first = chunk.segments.front();
  std::size_t end = chunk.segments[k].end();
  out.segments.push_back(
      {chunk.source.substr(first.offset, end - first.offset), first.offset});
  for (std::size_t i = k; i < chunk.connectors.size(); ++i) {
    out.connectors.push_back(chunk.connectors[i]);
    out.segments.push_back(chunk.segments[i + 1]);
  }
  return out;
}

// Connector-count dispatch, followed by a five-way pass over any group the
// dispatch left untyped.
void type_chunk(TitleExpression &expr, const ChunkedPhrase &chunk,
                const Lexicon &lex, const TyperOptions &options) {
  if (chunk.segments.empty()) return;
  const std::size_t n = chunk.connectors.size();
  if (n == 0) {
    expr.merge(five_way(chunk.segments[0].text, lex, options));
  } else if (n == 1) {
    expr.merge(apply_branch(branch_for(chunk.connectors[0]),
                            chunk.segments[0].text, chunk.segments[1].text,
                            lex));
  } else {
    expr.merge(multi_connector_typing(chunk, lex, options));
  }
  const ChunkedPhrase groups = n >= 2 ? absorb_of(chunk) : chunk;
  for (const Segment &group : groups.segments) {
    if (!expr.contains(clean(group.text))) {
      expr.merge(five_way(group.text, lex, options));
    }
  }
}

void type_phrase(TitleExpression &expr, std::string_view phrase,
                 const Lexicon &lex, const TyperOptions &options) {
  phrase = clean(phrase);
  if (phrase.empty()) return;
  type_chunk(expr, split_on_connectors(phrase), lex, options);
}

void type_pre_colon(TitleExpression &expr, std::string_view phrase,
                    const Lexicon &lex, const TyperOptions &options) {
  phrase = clean(phrase);
  if (phrase.empty()) return;
  if (lex.is_shared_task(phrase)) {
    expr.add(CT::kResearchProblem, phrase);
    return;
  }
  type_phrase(expr, phrase, lex, options);
}

// Types the head noun group as `head_type`, then the rest of the phrase.
void type_with_head(TitleExpression &expr, std::string_view phrase,
                    CT head_type, const Lexicon &lex,
                    const TyperOptions &options) {
  phrase = clean(phrase);
  if (phrase.empty()) return;
  ChunkedPhrase chunk = merge_head(split_on_connectors(phrase));
  if (chunk.segments.empty()) return;
  expr.add(head_type, clean(chunk.segments[0].text));
  type_chunk(expr, chunk, lex, options);
}

// The part after a case-study anchor is a language or a research problem.
void type_case_study_subject(TitleExpression &expr, std::string_view phrase,
                             const Lexicon &lex) {
  phrase = clean(phrase);
  if (phrase.empty()) return;
  expr.add(lex.is_language(phrase) ? CT::kLanguage : CT::kResearchProblem,
           phrase);
}

void type_using(TitleExpression &expr, std::string_view rest,
                const Lexicon &lex, const TyperOptions &options) {
  rest = clean(rest);
  if (rest.empty()) return;
  ChunkedPhrase chunk = merge_head(split_on_connectors(rest));
  if (chunk.segments.empty()) return;
  std::string_view object = clean(chunk.segments[0].text);
  if (!object.empty()) {
    if (auto type = sieve(object, {CT::kTool, CT::kMethod, CT::kResource},
                          lex)) {
      expr.add(*type, object);
    }
  }
  if (chunk.segments.size() == 2) {
    std::string_view purpose = clean(chunk.segments[1].text);
    if (purpose.empty()) return;
    if (lex.is_language(purpose)) {
      expr.add(CT::kLanguage, purpose);
    } else if (lex.is_research_problem(purpose)) {
      expr.add(CT::kResearchProblem, purpose);
    } else {
      expr.add(CT::kSolution, purpose);
    }
  } else if (chunk.segments.size() > 2) {
    type_phrase(expr, rest.substr(chunk.segments[1].offset), lex, options);
  }
}

}  // namespace

Branch branch_for(Connector connector) {
  switch (connector) {
    case Connector::kFor:
      return Branch::kFor;
    case Connector::kOf:
      return Branch::kOf;
    case Connector::kUsing:
    case Connector::kWith:
    case Connector::kBy:
      return Branch::kUsingWithBy;
    case Connector::kOn:
      return Branch::kOn;
    case Connector::kFrom:
      return Branch::kFrom;
    case Connector::kIn:
      return Branch::kIn;
    case Connector::kThrough:
    case Connector::kVia:
      return Branch::kThroughVia;
    case Connector::kTo:
      return Branch::kTo;
    case Connector::kAs:
      return Branch::kAs;
  }
  return Branch::kTo;
}

std::string_view branch_name(Branch branch) {
  switch (branch) {
    case Branch::kFor:
      return "for";
    case Branch::kOf:
      return "of";
    case Branch::kUsingWithBy:
      return "using|with|by";
    case Branch::kOn:
      return "on";
    case Branch::kFrom:
      return "from";
    case Branch::kIn:
      return "in";
    case Branch::kThroughVia:
      return "through|via";
    case Branch::kTo:
      return "to";
    case Branch::kAs:
      return "as";
  }
  return "";
}

ConceptSet branch_signature(Branch branch) {
  switch (branch) {
    case Branch::kFor:
      return {CT::kSolution, CT::kResearchProblem, CT::kResource,
              CT::kLanguage};
    case Branch::kOf:
      return {CT::kSolution, CT::kResearchProblem, CT::kResource,
              CT::kLanguage, CT::kTool};
    case Branch::kUsingWithBy:
      return {CT::kSolution, CT::kResource, CT::kLanguage, CT::kTool,
              CT::kMethod};
    case Branch::kOn:
      return {CT::kSolution, CT::kResearchProblem, CT::kResource,
              CT::kLanguage};
    case Branch::kFrom:
      return {CT::kSolution, CT::kResource};
    case Branch::kIn:
      return {CT::kResource, CT::kResearchProblem, CT::kSolution,
              CT::kLanguage, CT::kTool};
    case Branch::kThroughVia:
      return {CT::kSolution, CT::kResearchProblem, CT::kMethod,
              CT::kResource};
    case Branch::kTo:
      return {CT::kResource, CT::kResearchProblem, CT::kSolution,
              CT::kLanguage, CT::kTool, CT::kMethod};
    case Branch::kAs:
      return {CT::kResource, CT::kResearchProblem, CT::kSolution,
              CT::kMethod};
  }
  return {};
}

TitleExpression five_way_concept_typing(std::string_view phrase,
                                        const Lexicon &lexicon,
                                        const TyperOptions &options) {
  if (count_connectors(phrase) != 0) {
    throw std::invalid_argument(
        "five_way_concept_typing: phrase contains a connector");
  }
  return five_way(phrase, lexicon, options);
}

TitleExpression one_connector_heuristics(std::string_view phrase,
                                         const Lexicon &lexicon) {
  if (count_connectors(phrase) != 1) {
    throw std::invalid_argument(
        "one_connector_heuristics: phrase must have exactly one connector");
  }
  ChunkedPhrase chunk = split_on_connectors(phrase);
  if (!chunk.connectors.empty()) {
    return apply_branch(branch_for(chunk.connectors[0]),
                        chunk.segments[0].text, chunk.segments[1].text,
                        lexicon);
  }
  // The connector opens or closes the phrase; the lone segment takes the
  // side it sits on.
  Branch branch = branch_for(chunk.dropped.at(0));
  if (chunk.segments.empty()) return {};
  const Segment &segment = chunk.segments[0];
  bool connector_first = segment.offset > 0;
  return connector_first ? apply_branch(branch, "", segment.text, lexicon)
                         : apply_branch(branch, segment.text, "", lexicon);
}

TitleExpression multi_connector_typing(const ChunkedPhrase &chunk,
                                       const Lexicon &lexicon,
                                       const TyperOptions &options) {
  if (chunk.connectors.size() < 2) {
    throw std::invalid_argument(
        "multi_connector_typing: chunk needs two or more connectors");
  }
  const ChunkedPhrase groups = absorb_of(chunk);
  const auto &segs = groups.segments;
  const auto &conns = groups.connectors;
  TitleExpression expr;
  if (conns.size() == 1) {
    return apply_branch(branch_for(conns[0]), segs[0].text, segs[1].text,
                        lexicon);
  }
  expr.merge(five_way(segs.back().text, lexicon, options));
  for (std::size_t i = conns.size(); i-- > 0;) {
    expr.merge(apply_branch(branch_for(conns[i]), segs[i].text,
                            segs[i + 1].text, lexicon));
  }
  return expr;
}

TitleExpression type_template(const Title &title,
                              const TemplateClass &template_class,
                              const Lexicon &lexicon,
                              const TyperOptions &options) {
  TitleExpression expr;
  const std::string_view text = title.text;
  const auto &split = template_class.split_points;
  auto point = [&](std::size_t i) { return split.at(i); };

  switch (template_class.kind) {
    case TemplateKind::kSpecialWordColon: {
      expr.add(CT::kSolution, clean(text.substr(0, point(0))));
      std::string_view post = clean(text.substr(point(0) + 1));
      if (!post.empty() && !lexicon.non_content_phrase(post)) {
        type_with_head(expr, post, CT::kSolution, lexicon, options);
      }
      break;
    }
    case TemplateKind::kUsingPrefix:
      type_using(expr, text.substr(point(0)), lexicon, options);
      break;
    case TemplateKind::kColonCaseStudy:
      type_pre_colon(expr, text.substr(0, point(0)), lexicon, options);
      type_case_study_subject(expr, text.substr(point(2)), lexicon);
      break;
    case TemplateKind::kCaseStudyContained:
      type_phrase(expr, trim_chars(text.substr(0, point(0)), " :-,("),
                  lexicon, options);
      type_case_study_subject(expr, text.substr(point(1)), lexicon);
      break;
    case TemplateKind::kColonGeneric: {
      type_pre_colon(expr, text.substr(0, point(0)), lexicon, options);
      std::string_view post = clean(text.substr(point(0) + 1));
      if (!post.empty() && !lexicon.non_content_phrase(post)) {
        type_phrase(expr, post, lexicon, options);
      }
      break;
    }
    case TemplateKind::kAppliedTo: {
      type_phrase(expr, text.substr(0, point(0)), lexicon, options);
      std::string_view right = clean(text.substr(point(1)));
      if (right.empty()) break;
      if (count_connectors(right) == 0) {
        if (lexicon.is_research_problem(right)) {
          expr.add(CT::kResearchProblem, right);
        } else {
          expr.merge(five_way(right, lexicon, options));
        }
      } else {
        type_phrase(expr, right, lexicon, options);
      }
      break;
    }
    case TemplateKind::kNonContentPrefix:
      type_phrase(expr, text.substr(point(0)), lexicon, options);
      break;
    case TemplateKind::kDescriptionOf: {
      std::string_view rest = clean(text.substr(point(0)));
      if (rest.empty()) break;
      ChunkedPhrase chunk = merge_head(split_on_connectors(rest));
      if (chunk.segments.empty()) break;
      std::string_view head = clean(chunk.segments[0].text);
      CT head_type =
          !head.empty() && lexicon.is_tool(head) ? CT::kTool : CT::kSolution;
      type_with_head(expr, rest, head_type, lexicon, options);
      break;
    }
    case TemplateKind::kDefault:
      type_phrase(expr, text, lexicon, options);
      break;
  }
  return expr;
}

}  // namespace titleminer
