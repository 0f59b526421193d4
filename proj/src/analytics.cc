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

#include "titleminer/analytics.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "titleminer/text.h"

namespace titleminer {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string dump(const ordered_json &j) {
  return j.dump(-1, ' ', false, ordered_json::error_handler_t::replace);
}

RankedTerms rank(const std::map<std::string, std::size_t> &counts) {
  RankedTerms ranked(counts.begin(), counts.end());
  // std::map already orders terms, so a stable sort on count keeps ties
  // lexicographic.
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto &a, const auto &b) { return a.second > b.second; });
  return ranked;
}

std::size_t limit(const RankedTerms &terms, std::size_t top) {
  return top == 0 ? terms.size() : std::min(top, terms.size());
}

std::size_t count_width(const RankedTerms &terms, std::size_t n) {
  std::size_t width = 5;  // "count"
  for (std::size_t i = 0; i < n; ++i) {
    width = std::max(width, std::to_string(terms[i].second).size());
  }
  return width;
}

void pad_left(std::ostringstream &out, const std::string &s, std::size_t w) {
  if (s.size() < w) out << std::string(w - s.size(), ' ');
  out << s;
}

void render_ranking(std::ostringstream &out, const RankedTerms &terms,
                    std::size_t top, const std::string &indent) {
  std::size_t n = limit(terms, top);
  std::size_t rank_w = std::max<std::size_t>(4, std::to_string(n).size());
  std::size_t count_w = count_width(terms, n);
  out << indent;
  pad_left(out, "rank", rank_w);
  out << "  ";
  pad_left(out, "count", count_w);
  out << "  term\n";
  for (std::size_t i = 0; i < n; ++i) {
    out << indent;
    pad_left(out, std::to_string(i + 1), rank_w);
    out << "  ";
    pad_left(out, std::to_string(terms[i].second), count_w);
    out << "  " << terms[i].first << "\n";
  }
}

std::string format_percent(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f%%", value * 100.0);
  return buf;
}

}  // namespace

FrequencyTable concept_frequencies(
    const std::vector<ExtractionRecord> &records) {
  std::map<ConceptType, std::map<std::string, std::size_t>> counts;
  for (const ExtractionRecord &record : records) {
    for (ConceptType type : kAllConcepts) {
      for (const std::string &phrase : record.expression.list(type)) {
        std::string term = normalize_term(phrase);
        if (!term.empty()) ++counts[type][term];
      }
    }
  }
  FrequencyTable table;
  for (const auto &[type, terms] : counts) table[type] = rank(terms);
  return table;
}

CenturySplit century_split(const std::vector<ExtractionRecord> &records) {
  std::vector<ExtractionRecord> early;
  std::vector<ExtractionRecord> late;
  CenturySplit split;
  for (const ExtractionRecord &record : records) {
    if (!record.title.year) {
      ++split.excluded;
    } else if (*record.title.year <= 2000) {
      early.push_back(record);
    } else {
      late.push_back(record);
    }
  }
  split.titles_20th = early.size();
  split.titles_21st = late.size();
  FrequencyTable early_terms = concept_frequencies(early);
  FrequencyTable late_terms = concept_frequencies(late);
  for (ConceptType type : kAllConcepts) {
    TrendTable &table = split.tables[type];
    table.concept_type = type;
    table.buckets[kTwentiethCentury] = early_terms[type];
    table.buckets[kTwentyFirstCentury] = late_terms[type];
  }
  return split;
}

GoldList load_gold_list(const std::filesystem::path &path, ConceptType type) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(path.string() + ": cannot read list");
  GoldList gold;
  gold.concept_type = type;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view entry = trim(line);
    if (entry.empty() || entry.front() == '#') continue;
    gold.terms.insert(normalize_term(entry));
  }
  return gold;
}

ExtractedTerms extracted_terms(const std::vector<ExtractionRecord> &records) {
  ExtractedTerms terms;
  for (const ExtractionRecord &record : records) {
    for (ConceptType type : kAllConcepts) {
      for (const std::string &phrase : record.expression.list(type)) {
        terms[type].push_back(phrase);
      }
    }
  }
  return terms;
}

std::map<ConceptType, std::optional<double>> precision_eval(
    const ExtractedTerms &extracted,
    const std::map<ConceptType, GoldList> &gold) {
  std::map<ConceptType, std::optional<double>> result;
  for (const auto &[type, list] : gold) {
    std::unordered_set<std::string> reference;
    for (const std::string &t : list.terms) reference.insert(normalize_term(t));
    std::unordered_set<std::string> distinct;
    auto it = extracted.find(type);
    if (it != extracted.end()) {
      for (const std::string &t : it->second) {
        std::string term = normalize_term(t);
        if (!term.empty()) distinct.insert(std::move(term));
      }
    }
    if (distinct.empty()) {
      result[type] = std::nullopt;
      continue;
    }
    std::size_t hits = 0;
    for (const std::string &t : distinct) hits += reference.count(t);
    result[type] = static_cast<double>(hits) / static_cast<double>(distinct.size());
  }
  return result;
}

std::optional<double> recall_eval(
    const std::vector<std::string> &extracted,
    const std::unordered_set<std::string> &oracle) {
  std::unordered_set<std::string> reference;
  for (const std::string &t : oracle) {
    std::string term = normalize_term(t);
    if (!term.empty()) reference.insert(std::move(term));
  }
  if (reference.empty()) return std::nullopt;
  std::unordered_set<std::string> found;
  for (const std::string &t : extracted) found.insert(normalize_term(t));
  std::size_t hits = 0;
  for (const std::string &t : reference) hits += found.count(t);
  return static_cast<double>(hits) / static_cast<double>(reference.size());
}

std::map<TemplateKind, std::size_t> coverage_from_records(
    const std::vector<ExtractionRecord> &records) {
  std::map<TemplateKind, std::size_t> coverage;
  for (TemplateKind kind : kAllTemplates) coverage[kind] = 0;
  for (const ExtractionRecord &record : records) ++coverage[record.template_kind];
  return coverage;
}

std::string render_frequencies_text(const FrequencyTable &table,
                                    std::size_t top) {
  std::ostringstream out;
  bool first = true;
  for (ConceptType type : kAllConcepts) {
    auto it = table.find(type);
    if (it == table.end() || it->second.empty()) continue;
    if (!first) out << "\n";
    first = false;
    out << concept_name(type) << "\n";
    render_ranking(out, it->second, top, "  ");
  }
  return out.str();
}

std::string render_frequencies_ndjson(const FrequencyTable &table,
                                      std::size_t top) {
  std::string out;
  for (ConceptType type : kAllConcepts) {
    auto it = table.find(type);
    if (it == table.end()) continue;
    std::size_t n = limit(it->second, top);
    for (std::size_t i = 0; i < n; ++i) {
      ordered_json j;
      j["concept"] = std::string(concept_name(type));
      j["rank"] = i + 1;
      j["term"] = it->second[i].first;
      j["count"] = it->second[i].second;
      out += dump(j) + "\n";
    }
  }
  return out;
}

std::string render_century_text(const CenturySplit &split, std::size_t top) {
  std::ostringstream out;
  out << "titles  " << kTwentiethCentury << "=" << split.titles_20th << "  "
      << kTwentyFirstCentury << "=" << split.titles_21st
      << "  excluded=" << split.excluded << "\n";
  for (ConceptType type : kAllConcepts) {
    auto it = split.tables.find(type);
    if (it == split.tables.end()) continue;
    bool any = false;
    for (const auto &[label, terms] : it->second.buckets) any |= !terms.empty();
    if (!any) continue;
    out << "\n" << concept_name(type) << "\n";
    for (const char *label : {kTwentiethCentury, kTwentyFirstCentury}) {
      auto bucket = it->second.buckets.find(label);
      out << "  " << label << "\n";
      if (bucket == it->second.buckets.end() || bucket->second.empty()) {
        out << "    (none)\n";
      } else {
        render_ranking(out, bucket->second, top, "    ");
      }
    }
  }
  return out.str();
}

std::string render_century_ndjson(const CenturySplit &split, std::size_t top) {
  ordered_json summary;
  summary["titles_20th"] = split.titles_20th;
  summary["titles_21st"] = split.titles_21st;
  summary["excluded"] = split.excluded;
  std::string out = dump(summary) + "\n";
  for (ConceptType type : kAllConcepts) {
    auto it = split.tables.find(type);
    if (it == split.tables.end()) continue;
    for (const char *label : {kTwentiethCentury, kTwentyFirstCentury}) {
      auto bucket = it->second.buckets.find(label);
      if (bucket == it->second.buckets.end()) continue;
      std::size_t n = limit(bucket->second, top);
      for (std::size_t i = 0; i < n; ++i) {
        ordered_json j;
        j["concept"] = std::string(concept_name(type));
        j["period"] = label;
        j["rank"] = i + 1;
        j["term"] = bucket->second[i].first;
        j["count"] = bucket->second[i].second;
        out += dump(j) + "\n";
      }
    }
  }
  return out;
}

std::string render_coverage_text(
    const std::map<TemplateKind, std::size_t> &coverage) {
  std::size_t name_w = 8;  // "template"
  std::size_t count_w = 6;  // "titles"
  std::size_t total = 0;
  for (TemplateKind kind : kAllTemplates) {
    name_w = std::max(name_w, template_name(kind).size());
    auto it = coverage.find(kind);
    std::size_t n = it == coverage.end() ? 0 : it->second;
    total += n;
    count_w = std::max(count_w, std::to_string(n).size());
  }
  count_w = std::max(count_w, std::to_string(total).size());
  std::ostringstream out;
  auto row = [&](const std::string &rule, const std::string &name,
                 const std::string &count) {
    pad_left(out, rule, 4);
    out << "  " << name << std::string(name_w - name.size(), ' ') << "  ";
    pad_left(out, count, count_w);
    out << "\n";
  };
  row("rule", "template", "titles");
  for (TemplateKind kind : kAllTemplates) {
    auto it = coverage.find(kind);
    row(std::to_string(rule_number(kind)), std::string(template_name(kind)),
        std::to_string(it == coverage.end() ? 0 : it->second));
  }
  row("", "total", std::to_string(total));
  return out.str();
}

std::string render_coverage_ndjson(
    const std::map<TemplateKind, std::size_t> &coverage) {
  std::string out;
  for (TemplateKind kind : kAllTemplates) {
    auto it = coverage.find(kind);
    ordered_json j;
    j["rule"] = rule_number(kind);
    j["template"] = std::string(template_name(kind));
    j["count"] = it == coverage.end() ? 0 : it->second;
    out += dump(j) + "\n";
  }
  return out;
}

std::string render_metrics_text(const MetricReport &report,
                                std::string_view metric) {
  std::size_t name_w = 7;  // "concept"
  for (ConceptType type : kAllConcepts) {
    name_w = std::max(name_w, concept_name(type).size());
  }
  std::ostringstream out;
  out << "concept" << std::string(name_w - 7, ' ') << "  " << metric << "\n";
  for (ConceptType type : kAllConcepts) {
    auto it = report.find(type);
    if (it == report.end()) continue;
    std::string name(concept_name(type));
    out << name << std::string(name_w - name.size(), ' ') << "  ";
    switch (it->second.state) {
      case MetricCell::State::kValue:
        out << format_percent(it->second.value);
        break;
      case MetricCell::State::kUndefined:
        out << "undefined";
        break;
      case MetricCell::State::kMissing:
        out << "n/a";
        break;
    }
    out << "\n";
  }
  return out.str();
}

std::string render_metrics_ndjson(const MetricReport &report,
                                  std::string_view metric) {
  std::string out;
  for (ConceptType type : kAllConcepts) {
    auto it = report.find(type);
    if (it == report.end()) continue;
    ordered_json j;
    j["concept"] = std::string(concept_name(type));
    j["metric"] = std::string(metric);
    switch (it->second.state) {
      case MetricCell::State::kValue:
        j["value"] = it->second.value;
        j["status"] = "ok";
        break;
      case MetricCell::State::kUndefined:
        j["value"] = nullptr;
        j["status"] = "undefined";
        break;
      case MetricCell::State::kMissing:
        j["value"] = nullptr;
        j["status"] = "n/a";
        break;
    }
    out += dump(j) + "\n";
  }
  return out;
}

}  // namespace titleminer
