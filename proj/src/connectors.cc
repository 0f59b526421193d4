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

#include "titleminer/connectors.h"

#include <algorithm>
#include <stdexcept>

#include "titleminer/text.h"

namespace titleminer {

namespace {

constexpr std::string_view kEdgePunctuation = "()[]{},.;:!?\"'";

}  // namespace

std::string_view connector_name(Connector c) {
  switch (c) {
    case Connector::kTo:
      return "to";
    case Connector::kOf:
      return "of";
    case Connector::kOn:
      return "on";
    case Connector::kFor:
      return "for";
    case Connector::kFrom:
      return "from";
    case Connector::kWith:
      return "with";
    case Connector::kBy:
      return "by";
    case Connector::kVia:
      return "via";
    case Connector::kThrough:
      return "through";
    case Connector::kUsing:
      return "using";
    case Connector::kIn:
      return "in";
    case Connector::kAs:
      return "as";
  }
  return "";
}

std::optional<Connector> connector_from_token(std::string_view token) {
  token = trim_chars(token, kEdgePunctuation);
  if (token.size() < 2 || token.size() > 7) return std::nullopt;
  for (Connector c : kAllConnectors) {
    if (iequals(token, connector_name(c))) return c;
  }
  return std::nullopt;
}

std::size_t count_connectors(std::string_view phrase) {
  if (trim(phrase).empty()) {
    throw std::invalid_argument("count_connectors: empty phrase");
  }
  auto tokens = tokenize(phrase);
  return static_cast<std::size_t>(
      std::count_if(tokens.begin(), tokens.end(), [](const Token &t) {
        return connector_from_token(t.text).has_value();
      }));
}

ChunkedPhrase split_on_connectors(std::string_view phrase) {
  if (trim(phrase).empty()) {
    throw std::invalid_argument("split_on_connectors: empty phrase");
  }
  ChunkedPhrase chunk;
  chunk.source = std::string(phrase);
  std::string_view source = chunk.source;

  constexpr std::size_t kNoRun = std::string_view::npos;
  std::size_t run_start = kNoRun;
  std::size_t run_end = 0;
  std::optional<Connector> pending;
  auto close_run = [&] {
    if (run_start == kNoRun) return;
    if (pending) chunk.connectors.push_back(*pending);
    pending.reset();
    chunk.segments.push_back(
        {std::string(source.substr(run_start, run_end - run_start)),
         run_start});
    run_start = kNoRun;
  };

  for (const Token &token : tokenize(source)) {
    if (auto c = connector_from_token(token.text)) {
      if (run_start != kNoRun) {
        close_run();
        pending = *c;
      } else {
        // Nothing to the left: phrase-initial or doubled connector.
        chunk.dropped.push_back(*c);
      }
      continue;
    }
    if (run_start == kNoRun) run_start = token.offset;
    run_end = token.offset + token.text.size();
  }
  close_run();
  if (pending) chunk.dropped.push_back(*pending);
  return chunk;
}

ChunkedPhrase absorb_of(const ChunkedPhrase &chunk) {
  const auto &cs = chunk.connectors;
  bool has_of = std::find(cs.begin(), cs.end(), Connector::kOf) != cs.end();
  bool has_other = std::any_of(cs.begin(), cs.end(), [](Connector c) {
    return c != Connector::kOf;
  });
  if (cs.size() < 2 || !has_of || !has_other) return chunk;

  ChunkedPhrase out;
  out.source = chunk.source;
  out.dropped = chunk.dropped;
  std::size_t group_start = chunk.segments.front().offset;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (cs[i] == Connector::kOf) continue;
    std::size_t group_end = chunk.segments[i].end();
    out.segments.push_back(
        {chunk.source.substr(group_start, group_end - group_start),
         group_start});
    out.connectors.push_back(cs[i]);
    group_start = chunk.segments[i + 1].offset;
  }
  std::size_t group_end = chunk.segments.back().end();
  out.segments.push_back(
      {chunk.source.substr(group_start, group_end - group_start),
       group_start});
  return out;
}

}  // namespace titleminer
