// Copyright 2026 The Tractatus Network Authors.
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

// tnet: proposition and concept networks from numbered multilingual texts.
//
//   tnet stats      --manifest m.tsv
//   tnet simnet     --manifest m.tsv --lang de --threshold 0.3 --out out/
//   tnet conceptnet --manifest m.tsv --lang en --concepts c.txt --out out/
//   tnet align      --manifest m.tsv --src de --tgt en --out out/
//   tnet serve      --bundle out/ --port 8080
//
// Data goes to files or stdout, diagnostics to stderr. Exit status: 0 on
// success, 1 on usage errors, 2 on data errors.

#include <fcntl.h>
#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "tnet/align.hpp"
#include "tnet/concepts.hpp"
#include "tnet/corpus.hpp"
#include "tnet/document.hpp"
#include "tnet/error.hpp"
#include "tnet/search.hpp"
#include "tnet/serve.hpp"
#include "tnet/simnet.hpp"
#include "tnet/textproc.hpp"

#ifndef TNET_DEFAULT_RESOURCES
#define TNET_DEFAULT_RESOURCES "data/resources"
#endif

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kUsageError = 1;
constexpr int kDataError = 2;

struct CorpusOptions {
  std::string manifest;
  std::string resources;
  std::string out;
};

struct Context {
  tnet::Manifest manifest;
  std::vector<tnet::Version> versions;
  fs::path resources;
  fs::path out;
};

Context load_context(const CorpusOptions& opts) {
  Context ctx;
  if (opts.manifest.empty()) throw tnet::DataError("--manifest is required");
  ctx.manifest = tnet::load_manifest(opts.manifest);
  ctx.versions = tnet::load_versions(ctx.manifest);
  if (!opts.resources.empty()) {
    ctx.resources = opts.resources;
  } else if (const char* env = std::getenv("TNET_RESOURCES"); env && *env) {
    ctx.resources = env;
  } else if (ctx.manifest.resource_dir) {
    ctx.resources = *ctx.manifest.resource_dir;
  } else {
    ctx.resources = TNET_DEFAULT_RESOURCES;
  }
  if (!opts.out.empty()) {
    ctx.out = opts.out;
  } else if (ctx.manifest.output_dir) {
    ctx.out = *ctx.manifest.output_dir;
  } else {
    ctx.out = "out";
  }
  return ctx;
}

const tnet::Version& pick_version(const tnet::ParallelCorpus& corpus, const std::string& key) {
  const auto v = corpus.find_version(key);
  if (!v) throw tnet::DataError("no unique version '" + key + "' in manifest");
  return corpus.versions()[*v];
}

tnet::LangResources resources_for(const Context& ctx, const std::string& language) {
  const auto dir = ctx.resources / language;
  if (!fs::is_directory(dir)) {
    throw tnet::DataError("no resources for language '" + language + "' under " +
                          ctx.resources.string());
  }
  return tnet::LangResources::load(dir, language);
}

// Advisory lock on the output directory for the lifetime of a run.
class OutputLock {
 public:
  explicit OutputLock(const fs::path& dir) : path_(dir / ".tnet.lock") {
    fs::create_directories(dir);
    fd_ = ::open(path_.c_str(), O_CREAT | O_EXCL | O_WRONLY, 0644);
    if (fd_ < 0) {
      throw tnet::DataError("output directory " + dir.string() + " is locked by another run (" +
                            path_.string() + ")");
    }
  }
  ~OutputLock() {
    ::close(fd_);
    std::error_code ec;
    fs::remove(path_, ec);
  }
  OutputLock(const OutputLock&) = delete;
  OutputLock& operator=(const OutputLock&) = delete;

 private:
  fs::path path_;
  int fd_ = -1;
};

void add_corpus_options(CLI::App* cmd, CorpusOptions& opts, bool with_out) {
  cmd->add_option("--manifest", opts.manifest, "Version manifest (lang<TAB>translator<TAB>path)")
      ->required();
  cmd->add_option("--resources", opts.resources,
                  "Language resource directory (overrides $TNET_RESOURCES and the manifest)");
  if (with_out) cmd->add_option("--out", opts.out, "Output directory");
}

std::string format_double(double v) {
  std::ostringstream ss;
  ss << std::setprecision(6) << std::fixed << v;
  return ss.str();
}

json compactness_json(const tnet::SimilarityGraph& g) {
  json out = json::array();
  for (const auto& d : tnet::group_compactness(g)) {
    out.push_back({{"group", d.group},
                   {"nodes", d.nodes},
                   {"intra_edges", d.intra_edges},
                   {"density", d.density}});
  }
  return out;
}

json numbers_json(const std::vector<tnet::PropNumber>& numbers) {
  json out = json::array();
  for (const auto& n : numbers) out.push_back(n.str());
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Proposition and concept networks from numbered multilingual texts"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  CorpusOptions corpus_opts;

  // ingest
  auto* ingest = app.add_subcommand("ingest", "Load and align all versions; report coverage");
  add_corpus_options(ingest, corpus_opts, true);

  // stats
  auto* stats = app.add_subcommand("stats", "Token and type counts per version");
  add_corpus_options(stats, corpus_opts, false);

  // simnet
  std::string lang;
  std::string threshold = "0.3";
  bool set_intersection = false;
  int edge_base = 20;
  int edge_span = 180;
  auto* simnet = app.add_subcommand("simnet", "Build a proposition similarity network");
  add_corpus_options(simnet, corpus_opts, true);
  simnet->add_option("--lang", lang, "Version (language code or lang:translator)")->required();
  simnet->add_option("--threshold", threshold, "Edges need similarity strictly above this")
      ->capture_default_str();
  simnet->add_flag("--set-intersection", set_intersection,
                   "Count common token types instead of token occurrences");
  simnet->add_option("--edge-base", edge_base, "Edge length at similarity 1 (px)")
      ->capture_default_str();
  simnet->add_option("--edge-span", edge_span, "Extra edge length at similarity 0 (px)")
      ->capture_default_str();

  // conceptnet
  std::string concepts_file;
  std::string exclude_file;
  tnet::ConceptConfig concept_config;
  auto* conceptnet = app.add_subcommand("conceptnet", "Build a concept co-occurrence network");
  add_corpus_options(conceptnet, corpus_opts, true);
  conceptnet->add_option("--lang", lang, "Version (language code or lang:translator)")->required();
  conceptnet->add_option("--concepts", concepts_file,
                         "Concept annotation file (default: chunk non-stopword runs)");
  conceptnet->add_option("--exclude", exclude_file, "Concepts to drop, one per line");
  conceptnet->add_option("--single-window", concept_config.single_window,
                         "Max gap between two single-token concepts")
      ->capture_default_str();
  conceptnet->add_option("--multi-window", concept_config.multi_window,
                         "Max gap when a multi-word concept is involved")
      ->capture_default_str();
  conceptnet->add_option("--min-propositions", concept_config.min_propositions,
                         "Propositions needed to support an edge")
      ->capture_default_str();
  conceptnet->add_option("--min-frequency", concept_config.min_frequency,
                         "Occurrences needed to keep a concept")
      ->capture_default_str();

  // align / translate
  std::string src;
  std::string tgt;
  tnet::AlignConfig align_config;
  bool no_null = false;
  auto* align = app.add_subcommand("align", "Train IBM Model 1 and write word alignments");
  add_corpus_options(align, corpus_opts, true);
  align->add_option("--src", src, "Source version")->required();
  align->add_option("--tgt", tgt, "Target version")->required();
  align->add_option("--iterations", align_config.iterations, "EM iterations")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  align->add_flag("--no-null", no_null, "Train without the NULL source token");

  std::string concept_phrase;
  std::size_t top = 10;
  auto* translate = app.add_subcommand("translate", "Ranked translations of a source concept");
  add_corpus_options(translate, corpus_opts, false);
  translate->add_option("--src", src, "Source version")->required();
  translate->add_option("--tgt", tgt, "Target version")->required();
  translate->add_option("--concept", concept_phrase, "Source phrase")->required();
  translate->add_option("--iterations", align_config.iterations, "EM iterations")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  translate->add_option("--top", top, "Number of candidates")->capture_default_str();

  // search
  std::string bundle;
  std::string net;
  std::string query;
  std::size_t k = 5;
  std::size_t ngram = 3;
  auto* search = app.add_subcommand("search", "Character n-gram search over node labels");
  search->add_option("--bundle", bundle, "Bundle directory")->required();
  search->add_option("--net", net, "Network id")->required();
  search->add_option("--q", query, "Query text")->required();
  search->add_option("--k", k, "Number of results")->capture_default_str()->check(CLI::PositiveNumber);
  search->add_option("--n", ngram, "n-gram size")->capture_default_str()->check(CLI::PositiveNumber);

  // compare
  std::string doc_a;
  std::string doc_b;
  auto* compare = app.add_subcommand("compare", "Compare two proposition networks");
  compare->add_option("--a", doc_a, "First proposition document")->required();
  compare->add_option("--b", doc_b, "Second proposition document")->required();

  // serve
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string ui_dir;
  auto* serve = app.add_subcommand("serve", "Serve a bundle over a read-only HTTP API");
  serve->add_option("--bundle", bundle, "Bundle directory")->required();
  serve->add_option("--port", port, "Port")->capture_default_str()->check(CLI::Range(0, 65535));
  serve->add_option("--host", host, "Bind address")->capture_default_str();
  serve->add_option("--ui", ui_dir, "Directory of explorer UI assets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*ingest) {
      const auto ctx = load_context(corpus_opts);
      OutputLock lock(ctx.out);
      const auto corpus = tnet::align_corpus(ctx.versions);
      std::ostringstream report;
      report << "number";
      for (const auto& v : corpus.versions()) report << '\t' << v.id();
      report << '\n';
      for (const auto& row : corpus.rows()) {
        report << row.number.str();
        for (const auto& slot : row.slots) report << '\t' << (slot ? "present" : "absent");
        report << '\n';
      }
      tnet::write_file(ctx.out / "coverage.tsv", report.str());
      const auto absences = corpus.absences();
      std::cout << "versions\t" << corpus.versions().size() << "\nrows\t" << corpus.rows().size()
                << "\nabsent\t" << absences.size() << '\n';
      for (const auto& a : absences) {
        std::cout << a.number.str() << "\tmissing from";
        for (const auto& id : a.missing_from) std::cout << ' ' << id;
        std::cout << '\n';
      }
      return 0;
    }

    if (*stats) {
      const auto ctx = load_context(corpus_opts);
      std::cout << "language\ttranslator\tpropositions\ttokens\ttypes\n";
      for (const auto& v : ctx.versions) {
        const auto c = tnet::corpus_stats(v);
        std::cout << v.language() << '\t' << v.translator() << '\t' << v.size() << '\t' << c.tokens
                  << '\t' << c.types << '\n';
      }
      return 0;
    }

    if (*simnet) {
      const auto ctx = load_context(corpus_opts);
      tnet::NetworkConfig config;
      try {
        config.threshold = tnet::Ratio::parse(threshold);
      } catch (const tnet::ParseError& e) {
        std::cerr << "tnet: --threshold: " << e.what() << '\n';
        return kUsageError;
      }
      config.intersection =
          set_intersection ? tnet::Intersection::Set : tnet::Intersection::Multiset;
      config.edge_length_base = edge_base;
      config.edge_length_span = edge_span;
      config.validate();

      const auto corpus = tnet::align_corpus(ctx.versions);
      const auto& version = pick_version(corpus, lang);
      const auto resources = resources_for(ctx, version.language());
      OutputLock lock(ctx.out);
      const auto graph = tnet::build_network(version, resources, config);
      const auto doc = tnet::to_document(tnet::style(graph, config));
      const auto id = tnet::document_id("propositions", version.id());
      tnet::write_to_bundle(ctx.out, id, doc);
      std::cerr << "tnet: " << id << ": " << graph.nodes.size() << " nodes, "
                << graph.edges.size() << " edges\n";
      std::cout << (ctx.out / (id + ".json")).string() << '\n';
      return 0;
    }

    if (*conceptnet) {
      const auto ctx = load_context(corpus_opts);
      concept_config.validate();
      const auto corpus = tnet::align_corpus(ctx.versions);
      const auto& version = pick_version(corpus, lang);
      const auto resources = resources_for(ctx, version.language());
      std::set<std::string> excluded;
      if (!exclude_file.empty()) {
        std::ifstream in(exclude_file);
        if (!in) throw tnet::DataError("cannot open " + exclude_file);
        excluded = tnet::read_exclusions(in);
      }
      std::vector<tnet::ConceptEntry> raw;
      if (!concepts_file.empty()) {
        std::ifstream in(concepts_file);
        if (!in) throw tnet::DataError("cannot open " + concepts_file);
        raw = tnet::read_concept_annotations(in, resources);
      } else {
        raw = tnet::chunk_concepts(version, resources);
      }
      const auto lexicon =
          tnet::build_lexicon(std::move(raw), version, resources, concept_config, excluded);
      OutputLock lock(ctx.out);
      const auto graph = tnet::build_concept_network(version, lexicon, resources, concept_config);
      const auto doc = tnet::to_document(graph, concept_config, tnet::NetworkConfig{});
      const auto id = tnet::document_id("concepts", version.id());
      tnet::write_to_bundle(ctx.out, id, doc);
      std::cerr << "tnet: " << id << ": " << graph.nodes.size() << " concepts, "
                << graph.edges.size() << " edges\n";
      std::cout << (ctx.out / (id + ".json")).string() << '\n';
      return 0;
    }

    if (*align || *translate) {
      const auto ctx = load_context(corpus_opts);
      align_config.use_null = !no_null;
      const auto corpus = tnet::align_corpus(ctx.versions);
      const auto pairs = tnet::sentence_pairs(corpus, src, tgt);
      const auto model = tnet::train_ibm1(pairs, src, tgt, align_config);
      const auto& ll = model.log_likelihoods();
      for (std::size_t i = 0; i < ll.size(); ++i) {
        std::cerr << "tnet: iteration " << i << " log-likelihood " << std::setprecision(12) << ll[i]
                  << '\n';
      }
      if (*translate) {
        std::cout << "phrase\tscore\tfrequency\tmean_probability\n";
        auto candidates = tnet::concept_translations(pairs, model, concept_phrase);
        if (candidates.size() > top) candidates.resize(top);
        for (const auto& c : candidates) {
          std::cout << c.phrase << '\t' << format_double(c.score) << '\t' << c.frequency << '\t'
                    << format_double(c.mean_probability) << '\n';
        }
        return 0;
      }
      OutputLock lock(ctx.out);
      const std::string stem = tnet::slugify(src) + "-" + tnet::slugify(tgt);
      std::ostringstream links;
      tnet::write_alignments(links, tnet::align_all(model, pairs));
      tnet::write_file(ctx.out / ("align-" + stem + ".txt"), links.str());
      std::ostringstream table;
      model.write_table(table);
      tnet::write_file(ctx.out / ("ttable-" + stem + ".tsv"), table.str());
      std::cout << (ctx.out / ("align-" + stem + ".txt")).string() << '\n'
                << (ctx.out / ("ttable-" + stem + ".tsv")).string() << '\n';
      return 0;
    }

    if (*search) {
      const auto entries = tnet::load_bundle(bundle);
      for (const auto& e : entries) {
        if (e.id != net) continue;
        std::map<std::string, std::string> labels;
        for (const auto& n : e.document.nodes) labels.emplace(n.id, n.label);
        if (labels.empty()) return 0;
        const tnet::NGramIndex index(labels, ngram);
        for (const auto& hit : index.query(query, k)) {
          std::cout << hit.id << '\t' << format_double(hit.score) << '\t' << labels.at(hit.id)
                    << '\n';
        }
        return 0;
      }
      throw tnet::DataError("unknown network '" + net + "' in " + bundle);
    }

    if (*compare) {
      const auto ga = tnet::graph_from_document(tnet::parse_document(tnet::read_file(doc_a)));
      const auto gb = tnet::graph_from_document(tnet::parse_document(tnet::read_file(doc_b)));
      const auto report = tnet::compare(ga, gb);
      const json out = {{"a", ga.version_id},
                        {"b", gb.version_id},
                        {"node_jaccard", report.node_jaccard},
                        {"edge_jaccard", report.edge_jaccard},
                        {"nodes_only_in_a", numbers_json(report.nodes_only_in_1)},
                        {"nodes_only_in_b", numbers_json(report.nodes_only_in_2)},
                        {"compactness_a", compactness_json(ga)},
                        {"compactness_b", compactness_json(gb)}};
      std::cout << out.dump(2) << '\n';
      return 0;
    }

    if (*serve) {
      auto service =
          std::make_shared<const tnet::NetworkService>(tnet::NetworkService::from_bundle(bundle));
      std::optional<fs::path> ui;
      if (!ui_dir.empty()) {
        if (!fs::is_directory(ui_dir)) throw tnet::DataError("no UI directory " + ui_dir);
        ui = ui_dir;
      }
      if (!tnet::run_server(service, host, port, ui)) {
        throw tnet::DataError("cannot bind " + host + ":" + std::to_string(port));
      }
      return 0;
    }
  } catch (const tnet::Error& e) {
    std::cerr << "tnet: " << e.what() << '\n';
    return kDataError;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "tnet: " << e.what() << '\n';
    return kDataError;
  }
  return kUsageError;
}
