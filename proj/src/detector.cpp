// Copyright 2026 The redumet Authors
// SPDX-License-Identifier: Apache-2.0

#include "redumet/detector.hpp"

#include <algorithm>
#include <thread>

namespace redumet {

std::optional<Kind> redundant(const Token& later, const Token& earlier,
                              const EmbeddingTable& table,
                              const SynonymConfig& config) {
  if (match_key(later.surface, config.lowercase) ==
      match_key(earlier.surface, config.lowercase)) {
    return Kind::Repetition;
  }
  if (is_synonym(later, earlier, table, config)) {
    return Kind::Synonym;
  }
  return std::nullopt;
}

std::vector<TokenFlag> detect_continuous(const Sentence& sentence,
                                         const EmbeddingTable& table,
                                         const SynonymConfig& config) {
  std::vector<TokenFlag> flags;
  for (std::size_t i = 1; i < sentence.size(); ++i) {
    auto kind = redundant(sentence[i], sentence[i - 1], table, config);
    if (!kind) continue;
    flags.push_back(TokenFlag{i, Category::Continuous, *kind, i - 1, false});
  }
  return flags;
}

std::vector<TokenFlag> detect_discontinuous(const Sentence& sentence,
                                            const StopwordSet& stopwords,
                                            ExemptionLedger& ledger,
                                            const EmbeddingTable& table,
                                            const SynonymConfig& config) {
  std::vector<TokenFlag> flags;
  if (sentence.size() < 3) return flags;

  // Continuous flags win per position; recompute their sites here so the
  // two detectors stay independently callable.
  std::vector<bool> continuous(sentence.size(), false);
  for (std::size_t i = 1; i < sentence.size(); ++i) {
    if (redundant(sentence[i], sentence[i - 1], table, config)) {
      continuous[i] = true;
    }
  }

  for (std::size_t i = 2; i < sentence.size(); ++i) {
    if (continuous[i]) continue;
    const std::string key = match_key(sentence[i].surface, config.lowercase);
    if (stopwords.contains(key)) continue;
    std::optional<Kind> kind;
    std::size_t partner = 0;
    for (std::size_t j = 0; j + 1 < i; ++j) {
      kind = redundant(sentence[i], sentence[j], table, config);
      if (kind) {
        partner = j;
        break;
      }
    }
    if (!kind) continue;
    const bool exempt = ledger.try_consume(key);
    flags.push_back(
        TokenFlag{i, Category::Discontinuous, *kind, partner, exempt});
  }
  return flags;
}

namespace {

double ratio_or_zero(std::size_t count, std::size_t length) {
  if (length < 2) return 0.0;
  return static_cast<double>(count) / static_cast<double>(length - 1);
}

}  // namespace

SentenceReport score_sentence(const EvalInstance& instance,
                              const StopwordSet& stopwords,
                              const EmbeddingTable& table,
                              const SynonymConfig& config) {
  const Sentence& hyp = instance.hypothesis;
  ExemptionLedger ledger = build_exemption_ledger(instance, table, config);

  SentenceReport report;
  report.id = instance.id;
  report.length = hyp.size();
  report.flags = detect_continuous(hyp, table, config);
  report.cr_count = report.flags.size();

  std::vector<TokenFlag> disc =
      detect_discontinuous(hyp, stopwords, ledger, table, config);
  for (const TokenFlag& flag : disc) {
    if (!flag.exempted) ++report.dr_count;
  }
  report.flags.insert(report.flags.end(), disc.begin(), disc.end());
  std::sort(report.flags.begin(), report.flags.end(),
            [](const TokenFlag& a, const TokenFlag& b) {
              return a.position < b.position;
            });

  report.crr = ratio_or_zero(report.cr_count, report.length);
  report.drr = ratio_or_zero(report.dr_count, report.length);
  return report;
}

CorpusReport score_corpus(const std::vector<EvalInstance>& instances,
                          const StopwordSet& stopwords,
                          const EmbeddingTable& table,
                          const SynonymConfig& config, unsigned threads) {
  CorpusReport corpus;
  corpus.sentence_reports.resize(instances.size());

  const std::size_t n = instances.size();
  unsigned workers = threads == 0 ? 1 : threads;
  if (workers > n) workers = n == 0 ? 1 : static_cast<unsigned>(n);

  auto run_slice = [&](unsigned slice) {
    for (std::size_t idx = slice; idx < n; idx += workers) {
      corpus.sentence_reports[idx] =
          score_sentence(instances[idx], stopwords, table, config);
    }
  };

  if (workers <= 1) {
    run_slice(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) {
      pool.emplace_back(run_slice, t);
    }
    for (std::thread& th : pool) th.join();
  }

  std::size_t cr_sum = 0, dr_sum = 0, denom = 0;
  double crr_sum = 0.0, drr_sum = 0.0;
  for (const SentenceReport& r : corpus.sentence_reports) {
    if (r.length >= 2) {
      cr_sum += r.cr_count;
      dr_sum += r.dr_count;
      denom += r.length - 1;
    }
    crr_sum += r.crr;
    drr_sum += r.drr;
  }
  if (denom > 0) {
    corpus.micro_crr = static_cast<double>(cr_sum) / static_cast<double>(denom);
    corpus.micro_drr = static_cast<double>(dr_sum) / static_cast<double>(denom);
  }
  if (!corpus.sentence_reports.empty()) {
    const double count = static_cast<double>(corpus.sentence_reports.size());
    corpus.macro_crr = crr_sum / count;
    corpus.macro_drr = drr_sum / count;
  }
  return corpus;
}

}  // namespace redumet
