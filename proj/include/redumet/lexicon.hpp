// Copyright 2026 The redumet Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "redumet/embedding.hpp"
#include "redumet/text_util.hpp"
#include "redumet/types.hpp"

namespace redumet {

// Whitespace-token frequencies over a training corpus.
struct FrequencyTable {
  StringMap<std::uint64_t> counts;
  std::uint64_t total = 0;
};

// Streams `path` line by line; tokens are whitespace-separated surfaces.
FrequencyTable count_frequencies(const std::string& path);

// Stopword membership is always tested on match keys.
struct StopwordSet {
  StringSet tokens;

  bool contains(std::string_view key) const { return tokens.contains(key); }
  bool empty() const { return tokens.empty(); }
  std::size_t size() const { return tokens.size(); }
};

// One token per line; blank lines and lines starting with '#' are skipped.
StopwordSet load_stopwords(const std::string& path);

// Writes tokens sorted by byte value, one per line.
void save_stopwords(const StopwordSet& set, const std::string& path);

// Top `k` tokens by count, ties broken by lexicographic surface order.
StopwordSet derive_stopwords(const FrequencyTable& freq, std::size_t k);

// Per-token duplication allowance for discontinuous detection.  quota(t) is
// max(c_ref, c_src) - 1 where c_* counts tokens equal to t or synonymous with
// it; tokens with both counts < 2 carry no entry.
class ExemptionLedger {
 public:
  ExemptionLedger() = default;
  explicit ExemptionLedger(StringMap<std::size_t> quotas);

  std::size_t quota(std::string_view key) const;
  // Decrements the remaining quota for `key`; false once exhausted or absent.
  bool try_consume(std::string_view key);
  bool empty() const { return remaining_.empty(); }
  const StringMap<std::size_t>& quotas() const { return initial_; }

 private:
  StringMap<std::size_t> initial_;
  StringMap<std::size_t> remaining_;
};

// Builds the ledger for one hypothesis from its reference and source.
ExemptionLedger build_exemption_ledger(const EvalInstance& instance,
                                       const EmbeddingTable& table,
                                       const SynonymConfig& config);

}  // namespace redumet

