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

#include "commands.h"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "titleminer/analytics.h"
#include "titleminer/corpus.h"
#include "titleminer/lexicon.h"
#include "titleminer/pipeline.h"
#include "titleminer/text.h"

namespace titleminer {

namespace {

namespace fs = std::filesystem;

// Thrown inside a command to end it with a given exit code.
struct CommandFailure {
  int code;
  std::string message;
};

std::string read_input(const std::string &path, std::istream &in) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << in.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file || fs::is_directory(path)) {
    throw CommandFailure{kExitBadInput, "cannot read " + path};
  }
  buffer << file.rdbuf();
  return buffer.str();
}

void write_output(const std::string &path, const std::string &data,
                  std::ostream &out) {
  if (path.empty() || path == "-") {
    out << data;
    out.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw CommandFailure{kExitBadInput, "cannot write " + path};
  file << data;
  if (!file) throw CommandFailure{kExitBadInput, "cannot write " + path};
}

Lexicon load_lexicon(const std::string &dir) {
  try {
    return Lexicon::load(dir.empty() ? default_lexicon_dir() : fs::path(dir));
  } catch (const LexiconError &e) {
    throw CommandFailure{kExitBadLexicon, std::string("lexicon: ") + e.what()};
  }
}

struct IngestResult {
  std::vector<Title> titles;
  std::size_t read = 0;
  std::size_t kept = 0;
  std::size_t duplicates = 0;
  std::size_t invalid = 0;
  std::size_t untitled = 0;
};

IngestResult ingest(const std::string &bibtex, std::ostream &err) {
  BibtexParseResult parsed;
  try {
    parsed = parse_bibtex(bibtex);
  } catch (const BibtexError &e) {
    throw CommandFailure{kExitBadInput, std::string("bibtex: ") + e.what() +
                                            " at byte " +
                                            std::to_string(e.offset())};
  }
  for (const std::string &warning : parsed.warnings) {
    err << "warning: " << warning << "\n";
  }
  IngestResult result;
  result.read = parsed.entries_seen;
  result.untitled = parsed.skipped_without_title;
  std::vector<Title> titles;
  for (const RawRecord &record : parsed.records) {
    try {
      titles.push_back(normalize_title(record));
    } catch (const InvalidTitleError &) {
      ++result.invalid;
    }
  }
  FilterResult filtered = dedup_and_filter(titles);
  result.titles = std::move(filtered.titles);
  result.duplicates = filtered.duplicates_removed;
  result.invalid += filtered.invalid_removed;
  result.kept = result.titles.size();
  return result;
}

void print_ingest_summary(const IngestResult &r, std::ostream &err) {
  err << "read=" << r.read << " kept=" << r.kept
      << " dropped=" << (r.read - r.kept) << " (duplicates=" << r.duplicates
      << " invalid=" << r.invalid << " untitled=" << r.untitled << ")\n";
}

std::string titles_ndjson(const std::vector<Title> &titles) {
  std::string out;
  for (const Title &title : titles) out += serialize_title(title) + "\n";
  return out;
}

// Lines starting with '{' are title records; any other line is a bare title.
std::vector<Title> read_titles(const std::string &text) {
  std::vector<Title> titles;
  std::istringstream lines(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    std::string_view content = trim(line);
    if (content.empty()) continue;
    if (content.front() == '{') {
      try {
        titles.push_back(deserialize_title(content));
      } catch (const RecordFormatError &e) {
        throw CommandFailure{kExitBadInput, "line " + std::to_string(line_no) +
                                                ": " + e.what()};
      }
    } else {
      titles.push_back(Title{std::string(content), std::nullopt, ""});
    }
  }
  return titles;
}

std::string records_ndjson(const std::vector<ExtractionRecord> &records) {
  std::string out;
  for (const ExtractionRecord &r : records) out += serialize_record(r) + "\n";
  return out;
}

void print_parse_summary(const std::vector<ExtractionRecord> &records,
                         std::ostream &err) {
  std::map<ConceptType, std::size_t> totals;
  std::size_t errors = 0;
  for (const ExtractionRecord &r : records) {
    if (!r.error.empty()) ++errors;
    for (ConceptType type : kAllConcepts) {
      totals[type] += r.expression.list(type).size();
    }
  }
  err << "titles=" << records.size() << " errors=" << errors;
  for (ConceptType type : kAllConcepts) {
    err << " " << concept_name(type) << "=" << totals[type];
  }
  err << "\n";
}

std::vector<ExtractionRecord> load_records(const std::string &path,
                                           std::istream &in) {
  std::string text = read_input(path, in);
  try {
    return read_records(text);
  } catch (const RecordFormatError &e) {
    throw CommandFailure{kExitBadRecords,
                         "malformed records: " + std::string(e.what())};
  }
}

struct StatsRequest {
  std::size_t top = 5;
  bool frequencies = false;
  bool century = false;
  bool coverage = false;
  bool ndjson = false;
};

std::string render_stats(const std::vector<ExtractionRecord> &records,
                         StatsRequest request) {
  if (!request.frequencies && !request.century && !request.coverage) {
    request.frequencies = true;
  }
  std::vector<std::string> sections;
  if (request.frequencies) {
    FrequencyTable table = concept_frequencies(records);
    sections.push_back(request.ndjson
                           ? render_frequencies_ndjson(table, request.top)
                           : render_frequencies_text(table, request.top));
  }
  if (request.century) {
    CenturySplit split = century_split(records);
    sections.push_back(request.ndjson
                           ? render_century_ndjson(split, request.top)
                           : render_century_text(split, request.top));
  }
  if (request.coverage) {
    auto coverage = coverage_from_records(records);
    sections.push_back(request.ndjson ? render_coverage_ndjson(coverage)
                                      : render_coverage_text(coverage));
  }
  std::string out;
  for (const std::string &section : sections) {
    if (section.empty()) continue;
    if (!out.empty() && !request.ndjson) out += "\n";
    out += section;
  }
  return out;
}

MetricReport evaluate(const std::vector<ExtractionRecord> &records,
                      const fs::path &gold_dir, bool precision) {
  ExtractedTerms extracted = extracted_terms(records);
  MetricReport report;
  for (ConceptType type : kAllConcepts) {
    fs::path path = gold_dir / (std::string(concept_name(type)) + ".txt");
    if (!fs::is_regular_file(path)) {
      report[type] = MetricCell{};  // n/a
      continue;
    }
    GoldList gold;
    try {
      gold = load_gold_list(path, type);
    } catch (const std::runtime_error &e) {
      throw CommandFailure{kExitBadInput, e.what()};
    }
    std::optional<double> value;
    if (precision) {
      value = precision_eval(extracted, {{type, gold}}).at(type);
    } else {
      value = recall_eval(extracted[type], gold.terms);
    }
    MetricCell cell;
    cell.state = value ? MetricCell::State::kValue
                       : MetricCell::State::kUndefined;
    cell.value = value.value_or(0.0);
    report[type] = cell;
  }
  return report;
}

}  // namespace

int run_cli(int argc, const char *const *argv, std::istream &in,
            std::ostream &out, std::ostream &err) {
  CLI::App app{"Rule-based concept extraction from scholarly article titles",
               "title_miner"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "title_miner 1.0.0");

  std::string lexicon_dir;
  unsigned jobs = 1;
  bool fallthrough = false;

  // ingest
  std::string ingest_input;
  std::string ingest_output;
  CLI::App *ingest_cmd =
      app.add_subcommand("ingest", "Normalize and deduplicate BibTeX titles");
  ingest_cmd->add_option("input", ingest_input, "BibTeX file, '-' for stdin")
      ->required();
  ingest_cmd->add_option("-o,--output", ingest_output,
                         "Title stream (ndjson), stdout by default");

  // parse
  std::string parse_input = "-";
  std::string parse_output;
  CLI::App *parse_cmd =
      app.add_subcommand("parse", "Extract typed concepts from titles");
  parse_cmd->add_option("input", parse_input,
                        "Title stream or one title per line, '-' for stdin");
  parse_cmd->add_option("-o,--output", parse_output,
                        "Extraction records (ndjson), stdout by default");
  parse_cmd->add_option("--lexicon", lexicon_dir, "Lexicon directory");
  parse_cmd->add_option("-j,--jobs", jobs, "Worker threads")
      ->check(CLI::Range(1u, 256u));
  parse_cmd->add_flag("--fallthrough-rp", fallthrough,
                      "Type phrases no sieve accepts as research problems");

  // stats
  std::string stats_input;
  std::string format = "text";
  StatsRequest stats_request;
  CLI::App *stats_cmd =
      app.add_subcommand("stats", "Frequency, trend and coverage tables");
  stats_cmd->add_option("records", stats_input, "Records file, '-' for stdin")
      ->required();
  stats_cmd->add_option("--top", stats_request.top,
                        "Rows per ranking, 0 for all")
      ->capture_default_str();
  stats_cmd->add_flag("--frequencies", stats_request.frequencies,
                      "Top terms per concept (the default table)");
  stats_cmd->add_flag("--century", stats_request.century,
                      "Top terms per concept before and after 2001");
  stats_cmd->add_flag("--coverage", stats_request.coverage,
                      "Titles routed to each template");
  stats_cmd->add_option("--format", format, "text or ndjson")
      ->check(CLI::IsMember({"text", "ndjson"}));

  // eval
  std::string eval_input;
  std::string gold_dir;
  std::string mode = "precision";
  CLI::App *eval_cmd =
      app.add_subcommand("eval", "Precision or recall against term lists");
  eval_cmd->add_option("records", eval_input, "Records file, '-' for stdin")
      ->required();
  eval_cmd->add_option("--gold", gold_dir,
                       "Directory of <concept>.txt term lists")
      ->required();
  eval_cmd->add_option("--mode", mode, "precision or recall")
      ->check(CLI::IsMember({"precision", "recall"}));
  eval_cmd->add_option("--format", format, "text or ndjson")
      ->check(CLI::IsMember({"text", "ndjson"}));

  // pipeline
  std::string pipeline_input;
  std::string out_dir;
  CLI::App *pipeline_cmd = app.add_subcommand(
      "pipeline", "ingest, parse and stats in one run");
  pipeline_cmd->add_option("input", pipeline_input, "BibTeX file")
      ->required();
  pipeline_cmd->add_option("--out-dir", out_dir, "Output directory")
      ->required();
  pipeline_cmd->add_option("--lexicon", lexicon_dir, "Lexicon directory");
  pipeline_cmd->add_option("-j,--jobs", jobs, "Worker threads")
      ->check(CLI::Range(1u, 256u));
  pipeline_cmd->add_option("--top", stats_request.top,
                           "Rows per ranking, 0 for all");
  pipeline_cmd->add_flag("--fallthrough-rp", fallthrough,
                         "Type phrases no sieve accepts as research problems");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (ingest_cmd->parsed()) {
      IngestResult result = ingest(read_input(ingest_input, in), err);
      write_output(ingest_output, titles_ndjson(result.titles), out);
      print_ingest_summary(result, err);
    } else if (parse_cmd->parsed()) {
      Lexicon lexicon = load_lexicon(lexicon_dir);
      std::vector<Title> titles = read_titles(read_input(parse_input, in));
      TyperOptions options;
      options.fallthrough_research_problem = fallthrough;
      auto records = parse_corpus(titles, lexicon, options, jobs);
      write_output(parse_output, records_ndjson(records), out);
      print_parse_summary(records, err);
    } else if (stats_cmd->parsed()) {
      auto records = load_records(stats_input, in);
      stats_request.ndjson = format == "ndjson";
      write_output("", render_stats(records, stats_request), out);
    } else if (eval_cmd->parsed()) {
      if (!fs::is_directory(gold_dir)) {
        throw CommandFailure{kExitBadInput,
                             "gold directory not found: " + gold_dir};
      }
      auto records = load_records(eval_input, in);
      MetricReport report = evaluate(records, gold_dir, mode == "precision");
      write_output("",
                   format == "ndjson" ? render_metrics_ndjson(report, mode)
                                      : render_metrics_text(report, mode),
                   out);
    } else if (pipeline_cmd->parsed()) {
      Lexicon lexicon = load_lexicon(lexicon_dir);
      IngestResult result = ingest(read_input(pipeline_input, in), err);
      print_ingest_summary(result, err);
      TyperOptions options;
      options.fallthrough_research_problem = fallthrough;
      auto records = parse_corpus(result.titles, lexicon, options, jobs);
      print_parse_summary(records, err);
      std::error_code ec;
      fs::create_directories(out_dir, ec);
      if (ec) throw CommandFailure{kExitBadInput, "cannot create " + out_dir};
      fs::path dir(out_dir);
      write_output((dir / "titles.ndjson").string(),
                   titles_ndjson(result.titles), out);
      write_output((dir / "records.ndjson").string(), records_ndjson(records),
                   out);
      StatsRequest all = stats_request;
      all.frequencies = all.century = all.coverage = true;
      write_output((dir / "stats.txt").string(), render_stats(records, all),
                   out);
    }
  } catch (const CommandFailure &failure) {
    err << "title_miner: " << failure.message << "\n";
    return failure.code;
  } catch (const std::exception &e) {
    err << "title_miner: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace titleminer
