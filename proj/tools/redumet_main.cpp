// Copyright 2026 The redumet Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "redumet/annotation_eval.hpp"
#include "redumet/corpus.hpp"
#include "redumet/detector.hpp"
#include "redumet/embedding.hpp"
#include "redumet/errors.hpp"
#include "redumet/lexicon.hpp"
#include "redumet/perturb.hpp"
#include "redumet/report_io.hpp"
#include "redumet/text_util.hpp"
#include "redumet/types.hpp"

namespace {

using namespace redumet;

struct ScoreOptions {
  std::string src;
  std::string hyp;
  std::string ref;
  std::string embeddings;
  std::string stopword_file;
  std::string train_file;
  std::size_t train_k = 0;  // 0 = pick 3 or 10 by training-data script
  std::size_t k_cjk = 3;
  std::size_t k_other = 10;
  double tau = 0.8;
  bool lowercase = false;
  std::string format = "json";
  std::string output;
  unsigned threads = 1;
};

struct EvalOptions {
  std::string report;
  std::string gold;
  std::string category = "continuous";
  std::string kappa_gold;
};

struct PerturbOptions {
  std::string ref;
  std::string type = "cr";
  std::size_t count = 1;
  std::uint64_t seed = 0;
  std::size_t min_gap = 2;
  std::string embeddings;
  std::string stopword_file;
  std::size_t k_cjk = 3;
  std::size_t k_other = 10;
  double tau = 0.8;
  bool lowercase = false;
  std::string out_hyp;
  std::string out_gold;
};

struct StopwordOptions {
  std::string train;
  std::size_t k = 0;  // 0 = pick 3 or 10 by training-data script
  std::string output;
};

StringSet keyed_set(const StringSet& raw, bool lowercase) {
  if (!lowercase) return raw;
  StringSet out;
  for (const std::string& tok : raw) {
    out.insert(match_key(tok, true));
  }
  return out;
}

// Chinese-script training data gets the short stopword list.
std::size_t auto_train_k(const FrequencyTable& freq) {
  std::uint64_t cjk_occurrences = 0;
  for (const auto& [tok, count] : freq.counts) {
    if (contains_cjk(tok)) cjk_occurrences += count;
  }
  return (freq.total > 0 && cjk_occurrences * 2 > freq.total) ? 3 : 10;
}

// Resolves the detector stopword set: user-provided file or derived
// training stopwords, unioned with the embedding-dictionary heads.
StopwordSet resolve_stopwords(const std::string& stopword_file,
                              const std::string& train_file,
                              std::size_t train_k, const EmbeddingTable& table,
                              std::size_t k_cjk, std::size_t k_other,
                              bool lowercase) {
  if (!stopword_file.empty() && !train_file.empty()) {
    throw InvariantViolation(
        "give at most one of --stopwords and --train, not both");
  }
  StopwordSet resolved;
  if (!stopword_file.empty()) {
    resolved = load_stopwords(stopword_file);
  } else if (!train_file.empty()) {
    FrequencyTable freq = count_frequencies(train_file);
    if (train_k == 0) train_k = auto_train_k(freq);
    resolved = derive_stopwords(freq, train_k);
  } else {
    std::cerr << "redumet: warning: no stopword file or training corpus "
                 "given; only embedding-dictionary stopwords apply\n";
  }
  StringSet dict = embedding_stopwords(table, k_cjk, k_other);
  StopwordSet keyed;
  keyed.tokens = keyed_set(resolved.tokens, lowercase);
  for (const std::string& tok : keyed_set(dict, lowercase)) {
    keyed.tokens.insert(tok);
  }
  return keyed;
}

int run_score(const ScoreOptions& opt) {
  EmbeddingTable table = load_embeddings(opt.embeddings);
  SynonymConfig config;
  config.tau = opt.tau;
  config.lowercase = opt.lowercase;
  config.excluded =
      keyed_set(embedding_stopwords(table, opt.k_cjk, opt.k_other),
                opt.lowercase);
  StopwordSet stopwords =
      resolve_stopwords(opt.stopword_file, opt.train_file, opt.train_k, table,
                        opt.k_cjk, opt.k_other, opt.lowercase);

  std::vector<EvalInstance> instances =
      load_parallel(opt.src, opt.hyp, opt.ref);
  CorpusReport report =
      score_corpus(instances, stopwords, table, config, opt.threads);

  RunConfig echo;
  echo.src = opt.src;
  echo.hyp = opt.hyp;
  echo.ref = opt.ref;
  echo.embeddings = opt.embeddings;
  echo.stopword_file = opt.stopword_file;
  echo.train_file = opt.train_file;
  echo.stopword_k_cjk = opt.k_cjk;
  echo.stopword_k_other = opt.k_other;
  echo.tau = opt.tau;
  echo.lowercase = opt.lowercase;

  if (opt.format == "json") {
    write_report_json(report, echo, opt.output);
  } else {
    write_report_tsv(report, opt.output);
  }

  std::cout << "sentences: " << report.sentence_reports.size() << "\n"
            << "micro CRR " << format_percent(report.micro_crr)
            << "  micro DRR " << format_percent(report.micro_drr) << "\n"
            << "macro CRR " << format_percent(report.macro_crr)
            << "  macro DRR " << format_percent(report.macro_drr) << "\n"
            << "report written to " << opt.output << "\n";
  return 0;
}

int run_stopwords(const StopwordOptions& opt) {
  FrequencyTable freq = count_frequencies(opt.train);
  std::size_t k = opt.k == 0 ? auto_train_k(freq) : opt.k;
  StopwordSet set = derive_stopwords(freq, k);
  save_stopwords(set, opt.output);
  std::cout << "wrote " << set.size() << " stopwords to " << opt.output
            << "\n";
  return 0;
}

int run_annotate_eval(const EvalOptions& opt) {
  CorpusReport report = read_report_json(opt.report);
  std::vector<AnnotationTuple> gold = parse_annotations(opt.gold);
  auto category = category_from_string(opt.category);
  if (!category) {
    throw InvariantViolation("unknown category: " + opt.category);
  }
  PrfScores scores = evaluate(report, gold, *category);
  std::cout << opt.category << ": P " << format_percent(scores.precision)
            << " R " << format_percent(scores.recall) << " F1 "
            << format_percent(scores.f1) << " (tp=" << scores.tp
            << ", fp=" << scores.fp << ", fn=" << scores.fn << ")\n";
  if (!opt.kappa_gold.empty()) {
    std::vector<AnnotationTuple> other = parse_annotations(opt.kappa_gold);
    std::vector<std::pair<std::size_t, std::size_t>> universe;
    universe.reserve(report.sentence_reports.size());
    for (const SentenceReport& sent : report.sentence_reports) {
      universe.emplace_back(sent.id, sent.length);
    }
    double kappa = pairwise_kappa(gold, other, universe);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", kappa);
    std::cout << "pairwise kappa: " << buf << "\n";
  }
  return 0;
}

int run_perturb(const PerturbOptions& opt) {
  EmbeddingTable table = load_embeddings(opt.embeddings);
  SynonymConfig config;
  config.tau = opt.tau;
  config.lowercase = opt.lowercase;
  config.excluded =
      keyed_set(embedding_stopwords(table, opt.k_cjk, opt.k_other),
                opt.lowercase);
  StopwordSet stopwords =
      resolve_stopwords(opt.stopword_file, "", 0, table, opt.k_cjk,
                        opt.k_other, opt.lowercase);

  std::string code = opt.type;
  std::transform(code.begin(), code.end(), code.begin(), [](unsigned char c) {
    return static_cast<char>(std::toupper(c));
  });
  auto err_type = type_from_code(code);
  if (!err_type) {
    throw InvariantViolation("unknown error type: " + opt.type);
  }
  PerturbationSpec spec;
  spec.err_type = *err_type;
  spec.count = opt.count;
  spec.min_gap = opt.min_gap;

  std::vector<Sentence> bases;
  {
    std::vector<EvalInstance> instances =
        load_parallel(opt.ref, opt.ref, opt.ref);
    bases.reserve(instances.size());
    for (EvalInstance& inst : instances) {
      bases.push_back(std::move(inst.hypothesis));
    }
  }

  std::ostringstream hyp_out;
  std::vector<AnnotationTuple> all_gold;
  std::size_t skipped = 0;
  for (std::size_t i = 0; i < bases.size(); ++i) {
    // Per-line seeds keep output independent of corpus slicing.
    spec.seed = splitmix64(opt.seed + i);
    try {
      PerturbResult result = perturb(bases[i], spec, table, config, stopwords);
      hyp_out << to_line(result.sentence) << '\n';
      for (AnnotationTuple& tuple : result.gold) {
        tuple.sentence_id = i;
        all_gold.push_back(std::move(tuple));
      }
    } catch (const NoEligibleSite&) {
      hyp_out << to_line(bases[i]) << '\n';
      ++skipped;
    }
  }

  atomic_write(opt.out_hyp, hyp_out.str());
  std::ostringstream gold_out;
  serialize_annotations(all_gold, gold_out);
  atomic_write(opt.out_gold, gold_out.str());

  std::cout << "perturbed " << (bases.size() - skipped) << " of "
            << bases.size() << " sentences (" << all_gold.size()
            << " errors); wrote " << opt.out_hyp << " and " << opt.out_gold
            << "\n";
  if (skipped > 0) {
    std::cerr << "redumet: warning: " << skipped
              << " sentences passed through unchanged (no eligible site)\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"information-redundancy metrics for tokenized MT output"};
  app.require_subcommand(1);

  ScoreOptions score_opt;
  CLI::App* score = app.add_subcommand(
      "score", "score a corpus for continuous/discontinuous redundancy");
  score->add_option("--src", score_opt.src, "source corpus")->required();
  score->add_option("--hyp", score_opt.hyp, "hypothesis corpus")->required();
  score->add_option("--ref", score_opt.ref, "reference corpus")->required();
  score->add_option("--embeddings", score_opt.embeddings, "embedding table")
      ->required();
  score->add_option("--stopwords", score_opt.stopword_file,
                    "stopword file (one token per line)");
  score->add_option("--train", score_opt.train_file,
                    "training corpus to derive stopwords from");
  score->add_option("--train-k", score_opt.train_k,
                    "training stopword count (0 = auto: 3 CJK, 10 other)");
  score->add_option("--k-cjk", score_opt.k_cjk,
                    "embedding-dictionary CJK stopword count");
  score->add_option("--k-other", score_opt.k_other,
                    "embedding-dictionary non-CJK stopword count");
  score->add_option("--tau", score_opt.tau, "synonym similarity threshold")
      ->check(CLI::Range(std::nextafter(0.0, 1.0), 1.0));
  score->add_flag("--lowercase", score_opt.lowercase,
                  "ASCII-lowercase tokens before matching");
  score->add_option("--format", score_opt.format, "report format")
      ->check(CLI::IsMember({"json", "tsv"}));
  score->add_option("--output", score_opt.output, "report path")->required();
  score->add_option("--threads", score_opt.threads, "worker thread count");

  StopwordOptions stop_opt;
  CLI::App* stop = app.add_subcommand(
      "stopwords", "derive top-k training-data stopwords");
  stop->add_option("--train", stop_opt.train, "training corpus")->required();
  stop->add_option("--k", stop_opt.k,
                   "stopword count (0 = auto: 3 CJK, 10 other)");
  stop->add_option("--output", stop_opt.output, "output path")->required();

  EvalOptions eval_opt;
  CLI::App* eval = app.add_subcommand(
      "annotate-eval", "score a report against human annotations");
  eval->add_option("--report", eval_opt.report, "JSON report from `score`")
      ->required();
  eval->add_option("--gold", eval_opt.gold, "gold annotation TSV")->required();
  eval->add_option("--category", eval_opt.category, "category to evaluate")
      ->check(CLI::IsMember({"continuous", "discontinuous"}));
  eval->add_option("--kappa-gold", eval_opt.kappa_gold,
                   "second annotator TSV; also print pairwise Cohen's kappa");

  PerturbOptions pert_opt;
  CLI::App* pert = app.add_subcommand(
      "perturb", "inject synthetic redundancy errors into clean sentences");
  pert->add_option("--ref", pert_opt.ref, "base corpus (one sentence/line)")
      ->required();
  pert->add_option("--type", pert_opt.type, "error type")
      ->check(CLI::IsMember({"cr", "cs", "dr", "ds"}))
      ->required();
  pert->add_option("--count", pert_opt.count, "errors per sentence")
      ->check(CLI::PositiveNumber);
  pert->add_option("--seed", pert_opt.seed, "random seed");
  pert->add_option("--min-gap", pert_opt.min_gap,
                   "minimum discontinuous index distance (>= 2)");
  pert->add_option("--embeddings", pert_opt.embeddings, "embedding table")
      ->required();
  pert->add_option("--stopwords", pert_opt.stopword_file,
                   "stopword file for site eligibility");
  pert->add_option("--k-cjk", pert_opt.k_cjk,
                   "embedding-dictionary CJK stopword count");
  pert->add_option("--k-other", pert_opt.k_other,
                   "embedding-dictionary non-CJK stopword count");
  pert->add_option("--tau", pert_opt.tau, "synonym similarity threshold")
      ->check(CLI::Range(std::nextafter(0.0, 1.0), 1.0));
  pert->add_flag("--lowercase", pert_opt.lowercase,
                 "ASCII-lowercase tokens before matching");
  pert->add_option("--out-hyp", pert_opt.out_hyp, "perturbed corpus path")
      ->required();
  pert->add_option("--out-gold", pert_opt.out_gold, "gold tuple TSV path")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (score->parsed()) return run_score(score_opt);
    if (stop->parsed()) return run_stopwords(stop_opt);
    if (eval->parsed()) return run_annotate_eval(eval_opt);
    if (pert->parsed()) return run_perturb(pert_opt);
  } catch (const Error& e) {
    std::cerr << "redumet: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
