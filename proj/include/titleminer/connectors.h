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

#ifndef TITLEMINER_CONNECTORS_H_
#define TITLEMINER_CONNECTORS_H_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace titleminer {

// Eleven prepositions and one verb that delimit phrase chunks.
enum class Connector {
  kTo,
  kOf,
  kOn,
  kFor,
  kFrom,
  kWith,
  kBy,
  kVia,
  kThrough,
  kUsing,
  kIn,
  kAs,
};

inline constexpr std::array<Connector, 12> kAllConnectors = {
    Connector::kTo,   Connector::kOf,   Connector::kOn,      Connector::kFor,
    Connector::kFrom, Connector::kWith, Connector::kBy,      Connector::kVia,
    Connector::kThrough, Connector::kUsing, Connector::kIn,  Connector::kAs,
};

std::string_view connector_name(Connector c);

// Whole-token, case-insensitive match after stripping surrounding
// punctuation. Hyphenated tokens never match.
std::optional<Connector> connector_from_token(std::string_view token);

// Number of connector tokens in the phrase. Throws std::invalid_argument on
// an empty phrase.
std::size_t count_connectors(std::string_view phrase);

struct Segment {
  std::string text;
  std::size_t offset = 0;  // byte offset into the chunked phrase

  std::size_t end() const { return offset + text.size(); }
  bool operator==(const Segment &) const = default;
};

// A phrase split on its connectors. connectors[i] sits between segments[i]
// and segments[i + 1]. Connectors with nothing on one side (phrase-initial,
// phrase-final or doubled) are moved to `dropped`.
struct ChunkedPhrase {
  std::string source;
  std::vector<Segment> segments;
  std::vector<Connector> connectors;
  std::vector<Connector> dropped;

  bool operator==(const ChunkedPhrase &) const = default;
};

// Throws std::invalid_argument on an empty phrase.
ChunkedPhrase split_on_connectors(std::string_view phrase);

// Re-joins "X of Y" into one noun group when the chunk has at least two
// connectors and at least one of them is not "of". Otherwise returns the
// chunk unchanged.
ChunkedPhrase absorb_of(const ChunkedPhrase &chunk);

}  // namespace titleminer

#endif  // TITLEMINER_CONNECTORS_H_
