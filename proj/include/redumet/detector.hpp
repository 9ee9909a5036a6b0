// Copyright 2026 The redumet Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "redumet/embedding.hpp"
#include "redumet/lexicon.hpp"
#include "redumet/types.hpp"

namespace redumet {

struct TokenFlag {
  std::size_t position = 0;
  Category category = Category::Continuous;
  Kind kind = Kind::Repetition;
  // Index of the earlier redundant mate; partner < position, and
  // Continuous flags have partner == position - 1.
  std::size_t partner = 0;
  // Suppressed by a ledger quota; kept for diagnostics, never counted.
  bool exempted = false;

  bool operator==(const TokenFlag&) const = default;
};

struct SentenceReport {
  std::size_t id = 0;
  std::size_t length = 0;
  std::size_t cr_count = 0;
  std::size_t dr_count = 0;
  double crr = 0.0;
  double drr = 0.0;
  std::vector<TokenFlag> flags;  // sorted by position; exempted ones included
};

struct CorpusReport {
  double micro_crr = 0.0;  // pooled counts / pooled (length-1), length >= 2
  double micro_drr = 0.0;
  double macro_crr = 0.0;  // unweighted mean of per-sentence ratios
  double macro_drr = 0.0;
  std::vector<SentenceReport> sentence_reports;
};

// R(later, earlier): Repetition on equal keys, else Synonym per the table.
std::optional<Kind> redundant(const Token& later, const Token& earlier,
                              const EmbeddingTable& table,
                              const SynonymConfig& config);

// Adjacent-pair scan; stopwords and ledger quotas never apply here.
std::vector<TokenFlag> detect_continuous(const Sentence& sentence,
                                         const EmbeddingTable& table,
                                         const SynonymConfig& config);

// Distant-pair scan over positions without a continuous flag.  Consumes
// ledger quotas left to right; stopword set holds match keys.
std::vector<TokenFlag> detect_discontinuous(const Sentence& sentence,
                                            const StopwordSet& stopwords,
                                            ExemptionLedger& ledger,
                                            const EmbeddingTable& table,
                                            const SynonymConfig& config);

SentenceReport score_sentence(const EvalInstance& instance,
                              const StopwordSet& stopwords,
                              const EmbeddingTable& table,
                              const SynonymConfig& config);

// Reports come back in instance order regardless of `threads`.
CorpusReport score_corpus(const std::vector<EvalInstance>& instances,
                          const StopwordSet& stopwords,
                          const EmbeddingTable& table,
                          const SynonymConfig& config, unsigned threads = 1);

}  // namespace redumet

