// Copyright 2026 The zsr Authors.
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

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <unordered_map>

#include "report_table.hpp"
#include "zsr/classifier.hpp"
#include "zsr/corpus_freq.hpp"
#include "zsr/embeddings.hpp"
#include "zsr/metrics.hpp"
#include "zsr/prompts.hpp"
#include "zsr/report_io.hpp"
#include "zsr/taxonomy.hpp"

namespace zsr::cli {

int exit_code_for(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::kParse:
    case ErrorKind::kDuplicateKey: return kParseFailure;
    case ErrorKind::kFormat: return kFormatFailure;
    case ErrorKind::kIo: return kIoFailure;
    case ErrorKind::kConfig: return kConfigFailure;
    case ErrorKind::kDimension: return kDimensionMismatch;
    case ErrorKind::kIdMismatch: return kIdMismatch;
    case ErrorKind::kMetric: return kMetricUndefined;
    case ErrorKind::kInvalidArgument: return kInvalidInput;
  }
  return kInternal;
}

namespace {

std::string one_line(std::string message) {
  std::replace(message.begin(), message.end(), '\n', ' ');
  std::replace(message.begin(), message.end(), '\r', ' ');
  return message;
}

void print_error(std::ostream& err, std::string_view kind, const std::string& message) {
  err << "zsr: error[" << kind << "]: " << one_line(message) << '\n';
}

void print_warning(std::ostream& err, const std::string& message) {
  err << "zsr: warning: " << one_line(message) << '\n';
}

/// Output sink that is stdout unless a path was given.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : fallback_(&fallback) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
    if (!*file_) throw Error(ErrorKind::kIo, "cannot write '" + path + "'");
  }

  std::ostream& stream() { return file_ ? *file_ : *fallback_; }

 private:
  std::ostream* fallback_;
  std::unique_ptr<std::ofstream> file_;
};

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error(ErrorKind::kIo, "cannot write '" + path + "'");
  f << content;
  if (!f) throw Error(ErrorKind::kIo, "failed writing '" + path + "'");
}

struct CommonOptions {
  std::string name_map;
  std::string descriptions;
  std::string strategy = "s-name";
  bool with_descriptions = false;
  std::string freq_table;
  std::string corpus;
  std::optional<std::size_t> caption_column;
  std::string prompt_template;
  bool fname_scientific_descriptions = false;
  std::string text_emb;
  std::string image_emb;
  std::string labels;
  std::string prompts;
  std::string dataset;
  bool renormalize = false;
  std::size_t threads = 1;
  std::string out;
  std::string predictions;
  std::string format = "text";
  std::vector<std::string> reports;
};

Strategy resolve_strategy(const CommonOptions& o) {
  auto s = parse_strategy(o.strategy);
  if (!s) throw Error(ErrorKind::kConfig, "unknown strategy '" + o.strategy + "'");
  s->with_descriptions = s->with_descriptions || o.with_descriptions;
  return *s;
}

std::optional<FrequencyTable> frequencies_for(const CommonOptions& o, const NameTable& names) {
  if (!o.freq_table.empty()) return read_frequency_table_file(o.freq_table);
  if (!o.corpus.empty()) {
    const PatternSet patterns(species_names(names));
    CorpusOptions copts;
    copts.caption_column = o.caption_column;
    copts.threads = o.threads;
    return count_corpus_file(o.corpus, patterns, copts);
  }
  return std::nullopt;
}

int cmd_resolve(const CommonOptions& o, std::ostream& out) {
  const NameTable names = load_name_table_file(o.name_map);
  Sink sink(o.out, out);
  for (const auto& r : names.records()) {
    const bool fallback = r.common_names.empty();
    sink.stream() << r.species_id << '\t' << r.scientific_name << '\t' << resolve_common(r)
                  << '\t' << (fallback ? "fallback" : "common") << '\n';
  }
  return kOk;
}

int cmd_count(const CommonOptions& o, std::ostream& out, std::ostream& err) {
  const NameTable names = load_name_table_file(o.name_map);
  const PatternSet patterns(species_names(names));
  CorpusOptions copts;
  copts.caption_column = o.caption_column;
  copts.threads = o.threads;
  const FrequencyTable table = count_corpus_file(o.corpus, patterns, copts);
  if (!o.out.empty()) {
    std::ostringstream tsv;
    write_frequency_table(table, tsv);
    write_file(o.out, tsv.str());
  }
  if (table.skipped_lines() != 0) {
    print_warning(err, "skipped " + std::to_string(table.skipped_lines()) +
                           " corpus lines (invalid UTF-8 or missing caption column)");
  }
  const Coverage c = coverage_report(table, names);
  out << "corpus_lines\t" << table.corpus_lines() << '\n'
      << "species\t" << c.species << '\n'
      << "S-names\t" << c.scientific << '\n'
      << "+ C-names\t" << c.scientific_or_common << '\n';
  return kOk;
}

int cmd_prompts(const CommonOptions& o, std::ostream& out, std::ostream& err) {
  const Strategy strategy = resolve_strategy(o);
  const NameTable names = load_name_table_file(o.name_map);
  DescriptionStore descriptions;
  if (!o.descriptions.empty()) {
    descriptions = load_descriptions_file(o.descriptions);
  } else if (strategy.with_descriptions) {
    print_warning(err, "--with-descriptions without --descriptions; emitting photo prompts only");
  }
  std::optional<FrequencyTable> freq;
  if (strategy.name_choice == NameChoice::kFrequent) {
    freq = frequencies_for(o, names);
    if (!freq) throw Error(ErrorKind::kConfig, "f-name requires --freq-table or --corpus");
  }
  PromptOptions popts;
  if (!o.prompt_template.empty()) popts.photo_template = o.prompt_template;
  if (o.fname_scientific_descriptions) {
    popts.frequent_description_name = FrequentDescriptionName::kScientific;
  }
  const auto sets = build_prompt_sets(names, strategy, descriptions, freq ? &*freq : nullptr, popts);
  Sink sink(o.out, out);
  write_prompt_sets(sets, sink.stream());
  return kOk;
}

std::string predictions_path_for(const CommonOptions& o) {
  if (!o.predictions.empty()) return o.predictions;
  const std::string& p = o.out;
  if (p.size() > 5 && p.compare(p.size() - 5, 5, ".json") == 0) {
    return p.substr(0, p.size() - 5) + ".predictions.tsv";
  }
  return p + ".predictions.tsv";
}

int cmd_classify(const CommonOptions& o, std::ostream& out, std::ostream& err) {
  const Strategy strategy = resolve_strategy(o);
  const LoadOptions lopts{o.renormalize};
  const EmbeddingMatrix text = load_embeddings(o.text_emb, lopts);
  const EmbeddingMatrix images = load_embeddings(o.image_emb, lopts);
  if (text.dim() != images.dim()) {
    throw Error(ErrorKind::kDimension, "text embeddings have dimension " +
                                           std::to_string(text.dim()) + ", image embeddings " +
                                           std::to_string(images.dim()));
  }

  std::optional<NameTable> names;
  std::vector<std::string> class_order;
  if (!o.name_map.empty()) {
    names = load_name_table_file(o.name_map);
    for (const auto& r : names->records()) class_order.push_back(r.species_id);
  }
  if (!o.prompts.empty()) {
    std::ifstream in(o.prompts);
    if (!in) throw Error(ErrorKind::kIo, "cannot open prompts '" + o.prompts + "'");
    for (const auto& set : read_prompt_sets(in)) {
      for (std::size_t k = 0; k < set.prompts.size(); ++k) {
        const std::string id = set.species_id + "#" + std::to_string(k);
        if (text.find(id) == EmbeddingMatrix::npos) {
          throw Error(ErrorKind::kIdMismatch, "no text embedding for prompt '" + id + "'");
        }
      }
    }
  }
  const ClassModel model = ClassModel::from_text_embeddings(text, class_order);

  const auto labels = read_labels_file(o.labels);
  std::unordered_map<std::string, std::string> label_of;
  for (const auto& l : labels) label_of.emplace(l.image_id, l.species_id);
  std::vector<ImagePrediction> rows;
  rows.reserve(images.rows());
  const auto predicted = classify_all(model, images, o.threads);
  for (std::size_t i = 0; i < images.rows(); ++i) {
    const auto it = label_of.find(images.ids()[i]);
    if (it == label_of.end()) {
      throw Error(ErrorKind::kIdMismatch, "image '" + images.ids()[i] + "' has no label");
    }
    rows.push_back({images.ids()[i], it->second, model.classes()[predicted[i]]});
  }
  if (labels.size() > images.rows()) {
    print_warning(err, std::to_string(labels.size() - images.rows()) +
                           " labels refer to images without embeddings");
  }

  std::vector<Prediction> preds;
  preds.reserve(rows.size());
  for (const auto& r : rows) preds.push_back({r.true_id, r.predicted_id});
  ReportDocument doc;
  doc.dataset = o.dataset;
  doc.strategy = to_string(strategy);
  doc.images = rows.size();
  doc.report = evaluate(preds, model.classes());
  if (names) {
    const auto typed = std::count_if(names->records().begin(), names->records().end(),
                                     [](const SpeciesRecord& r) { return r.organism_type.has_value(); });
    if (typed == static_cast<std::ptrdiff_t>(names->size())) {
      doc.report.per_type = breakdown_by_type(doc.report, *names);
    } else if (typed > 0) {
      print_warning(err, "some species lack an organism type; per-type breakdown omitted");
    }
  }

  const std::string json = to_json(doc);
  if (o.out.empty() || o.out == "-") {
    out << json;
  } else {
    write_file(o.out, json);
    std::ostringstream tsv;
    write_predictions(rows, tsv);
    write_file(predictions_path_for(o), tsv.str());
    out << "macro_accuracy\t" << doc.report.macro_accuracy << '\n'
        << "K\t" << doc.report.K() << '\n'
        << "images\t" << doc.images << '\n';
  }
  return kOk;
}

int cmd_report(const CommonOptions& o, std::ostream& out, std::ostream& err) {
  std::vector<ReportDocument> docs;
  for (const auto& path : o.reports) {
    docs.push_back(read_report_file(path));
    if (docs.back().dataset.empty()) {
      // Unlabeled runs are keyed by file stem.
      auto stem = path.substr(path.find_last_of('/') + 1);
      if (const auto dot = stem.find('.'); dot != std::string::npos) stem.resize(dot);
      docs.back().dataset = stem;
    }
  }
  std::vector<std::string> warnings;
  const auto format = o.format == "markdown" ? TableFormat::kMarkdown : TableFormat::kText;
  const std::string table = render_report_table(docs, format, warnings);
  for (const auto& w : warnings) print_warning(err, w);
  Sink sink(o.out, out);
  sink.stream() << table;
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zero-shot species recognition toolkit", "zsr"};
  app.require_subcommand(1);
  app.set_config("--config", "", "TOML config file; command-line flags take precedence");

  CommonOptions o;
  const std::vector<std::string> kStrategies = {"s-name", "c-name", "f-name"};

  auto* resolve = app.add_subcommand("resolve", "List the common-name resolution of each species");
  resolve->add_option("--name-map", o.name_map, "Name-map TSV")->required();
  resolve->add_option("--out", o.out, "Output path (default stdout)");

  auto* count = app.add_subcommand("count", "Count name document frequencies over a caption corpus");
  count->add_option("--corpus", o.corpus, "Caption corpus (.gz accepted, '-' for stdin)")->required();
  count->add_option("--name-map", o.name_map, "Name-map TSV")->required();
  count->add_option("--caption-column", o.caption_column, "1-based TSV column holding the caption");
  count->add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);
  count->add_option("--out", o.out, "Frequency-table TSV to write");

  auto* prompts = app.add_subcommand("prompts", "Build prompt sets as JSON-lines");
  prompts->add_option("--name-map", o.name_map, "Name-map TSV")->required();
  prompts->add_option("--descriptions", o.descriptions, "Descriptions TSV");
  prompts->add_option("--strategy", o.strategy, "Name strategy")->check(CLI::IsMember(kStrategies));
  prompts->add_flag("--with-descriptions", o.with_descriptions, "Add description prompts");
  prompts->add_option("--freq-table", o.freq_table, "Frequency table from `zsr count`");
  prompts->add_option("--corpus", o.corpus, "Corpus to count when no --freq-table is given");
  prompts->add_option("--caption-column", o.caption_column, "1-based TSV caption column");
  prompts->add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);
  prompts->add_option("--template", o.prompt_template, "Photo template containing {name}");
  prompts->add_flag("--fname-scientific-descriptions", o.fname_scientific_descriptions,
                    "Under f-name, write description prompts with the scientific name");
  prompts->add_option("--out", o.out, "Output JSON-lines path (default stdout)");

  auto* classify = app.add_subcommand("classify", "Classify image embeddings and write a report");
  classify->add_option("--text-emb", o.text_emb, "Prompt embeddings (ZSE1)")->required();
  classify->add_option("--image-emb", o.image_emb, "Image embeddings (ZSE1)")->required();
  classify->add_option("--labels", o.labels, "Labels TSV image_id<TAB>species_id")->required();
  classify->add_option("--name-map", o.name_map, "Name map (class order and organism types)");
  classify->add_option("--prompts", o.prompts, "Prompt JSON-lines to check text-id coverage");
  classify->add_option("--strategy", o.strategy, "Strategy label for the report")
      ->check(CLI::IsMember(kStrategies));
  classify->add_flag("--with-descriptions", o.with_descriptions, "Strategy used descriptions");
  classify->add_option("--dataset", o.dataset, "Dataset label for the report");
  classify->add_flag("--renormalize", o.renormalize, "Rescale rows instead of rejecting them");
  classify->add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);
  classify->add_option("--out", o.out, "Report JSON path (default stdout)");
  classify->add_option("--predictions", o.predictions, "Predictions TSV path");

  auto* report = app.add_subcommand("report", "Tabulate several report JSON files");
  report->add_option("reports", o.reports, "Report JSON files")->required();
  report->add_option("--format", o.format, "text or markdown")
      ->check(CLI::IsMember({"text", "markdown"}));
  report->add_option("--out", o.out, "Output path (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    print_error(err, "usage", e.what());
    return kUsage;
  }

  try {
    if (*resolve) return cmd_resolve(o, out);
    if (*count) return cmd_count(o, out, err);
    if (*prompts) return cmd_prompts(o, out, err);
    if (*classify) return cmd_classify(o, out, err);
    if (*report) return cmd_report(o, out, err);
  } catch (const Error& e) {
    print_error(err, to_string(e.kind()), e.what());
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    print_error(err, "internal", e.what());
    return kInternal;
  }
  return kUsage;
}

}  // namespace zsr::cli
