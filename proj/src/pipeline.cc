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

#include "titleminer/pipeline.h"

#include <algorithm>
#include <exception>
#include <thread>

#include "json.hpp"
#include "titleminer/text.h"

namespace titleminer {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string dump(const ordered_json &j) {
  return j.dump(-1, ' ', false, ordered_json::error_handler_t::replace);
}

ordered_json year_json(const std::optional<int> &year) {
  return year ? ordered_json(*year) : ordered_json(nullptr);
}

std::optional<int> year_from(const ordered_json &j, std::string_view key) {
  auto it = j.find(std::string(key));
  if (it == j.end() || it->is_null()) return std::nullopt;
  if (!it->is_number_integer()) {
    throw RecordFormatError("'" + std::string(key) + "' is not an integer");
  }
  return it->get<int>();
}

std::string string_from(const ordered_json &j, std::string_view key,
                        bool required) {
  auto it = j.find(std::string(key));
  if (it == j.end() || it->is_null()) {
    if (required) {
      throw RecordFormatError("missing field '" + std::string(key) + "'");
    }
    return {};
  }
  if (!it->is_string()) {
    throw RecordFormatError("'" + std::string(key) + "' is not a string");
  }
  return it->get<std::string>();
}

ordered_json parse_object(std::string_view line) {
  ordered_json j = ordered_json::parse(line, nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    throw RecordFormatError("not a JSON object");
  }
  return j;
}

}  // namespace

ExtractionRecord parse_title(const Title &title, const Lexicon &lexicon,
                             const TyperOptions &options) {
  ExtractionRecord record;
  record.title = title;
  TemplateClass template_class = classify(title, lexicon);
  record.template_kind = template_class.kind;
  record.expression = type_template(title, template_class, lexicon, options);
  return record;
}

std::vector<ExtractionRecord> parse_corpus(const std::vector<Title> &titles,
                                           const Lexicon &lexicon,
                                           const TyperOptions &options,
                                           unsigned jobs) {
  std::vector<ExtractionRecord> records(titles.size());
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      try {
        records[i] = parse_title(titles[i], lexicon, options);
      } catch (const std::exception &e) {
        records[i] = ExtractionRecord{};
        records[i].title = titles[i];
        records[i].error = e.what();
      }
    }
  };

  jobs = std::max(1u, jobs);
  if (jobs == 1 || titles.size() < 2) {
    work(0, titles.size());
    return records;
  }
  const std::size_t n = titles.size();
  const std::size_t workers = std::min<std::size_t>(jobs, n);
  const std::size_t per = (n + workers - 1) / workers;
  std::vector<std::thread> threads;
  for (std::size_t w = 0; w < workers; ++w) {
    std::size_t begin = w * per;
    std::size_t end = std::min(n, begin + per);
    if (begin >= end) break;
    threads.emplace_back(work, begin, end);
  }
  for (auto &t : threads) t.join();
  return records;
}

std::string serialize_title(const Title &title) {
  ordered_json j;
  j["text"] = title.text;
  j["year"] = year_json(title.year);
  j["source_key"] = title.source_key;
  return dump(j);
}

Title deserialize_title(std::string_view line) {
  ordered_json j = parse_object(line);
  Title title;
  title.text = string_from(j, "text", true);
  title.year = year_from(j, "year");
  title.source_key = string_from(j, "source_key", false);
  return title;
}

std::string serialize_record(const ExtractionRecord &record) {
  ordered_json j;
  j["title"] = record.title.text;
  j["year"] = year_json(record.title.year);
  j["source_key"] = record.title.source_key;
  j["template"] = std::string(template_name(record.template_kind));
  for (ConceptType type : kAllConcepts) {
    j[std::string(concept_name(type))] = record.expression.list(type);
  }
  if (!record.error.empty()) j["error"] = record.error;
  return dump(j);
}

ExtractionRecord deserialize_record(std::string_view line) {
  ordered_json j = parse_object(line);
  ExtractionRecord record;
  record.title.text = string_from(j, "title", true);
  record.title.year = year_from(j, "year");
  record.title.source_key = string_from(j, "source_key", false);
  std::string name = string_from(j, "template", true);
  auto kind = template_from_name(name);
  if (!kind) throw RecordFormatError("unknown template '" + name + "'");
  record.template_kind = *kind;
  for (ConceptType type : kAllConcepts) {
    std::string key(concept_name(type));
    auto it = j.find(std::string(key));
    if (it == j.end()) continue;
    if (!it->is_array()) throw RecordFormatError("'" + key + "' is not a list");
    for (const auto &item : *it) {
      if (!item.is_string()) {
        throw RecordFormatError("'" + key + "' holds a non-string item");
      }
      if (!record.expression.add(type, item.get<std::string>())) {
        throw RecordFormatError("phrase typed twice in '" + key + "'");
      }
    }
  }
  record.error = string_from(j, "error", false);
  return record;
}

std::vector<ExtractionRecord> read_records(std::string_view ndjson) {
  std::vector<ExtractionRecord> records;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < ndjson.size()) {
    std::size_t end = ndjson.find('\n', pos);
    if (end == std::string_view::npos) end = ndjson.size();
    ++line_no;
    std::string_view line = trim(ndjson.substr(pos, end - pos));
    pos = end + 1;
    if (line.empty()) continue;
    try {
      records.push_back(deserialize_record(line));
    } catch (const RecordFormatError &e) {
      throw RecordFormatError("line " + std::to_string(line_no) + ": " +
                              e.what());
    }
  }
  return records;
}

}  // namespace titleminer
