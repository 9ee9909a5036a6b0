// Copyright 2026 The redumet Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "redumet/embedding.hpp"
#include "redumet/text_util.hpp"
#include "redumet/types.hpp"

namespace redumet::testing {

// Self-deleting scratch directory for file-based tests.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::string& root() const { return root_; }
  std::string path(std::string_view name) const;

 private:
  std::string root_;
};

void write_file(const std::string& path, std::string_view content);
std::string read_file(const std::string& path);

Sentence sentence(std::string_view line);

EvalInstance make_instance(std::size_t id, std::string_view src,
                           std::string_view hyp, std::string_view ref);

// 2-D toy table for the taxonomy sentences: cos(ate, had) = 0.9 and no
// other pair crosses 0.8.
EmbeddingTable table1();
// The same table in embedding-file text form.
std::string table1_text();

// Property-test vocabulary w0..w10 (w11 stays out-of-table).  Pair cosines:
// (w1,w2) = 0.55, (w3,w4) = 0.75, (w5,w6) = 0.95, every other pair 0.
EmbeddingTable oracle_table();
// The synonym pairs that table implies at threshold tau, lowercase keys.
std::vector<std::pair<std::string, std::string>> oracle_pairs(double tau);

// Random sentence over the oracle vocabulary (plus w11 and, optionally,
// uppercase variants to exercise lowercase matching).
Sentence random_oracle_sentence(std::mt19937_64& rng, std::size_t max_length,
                                bool include_upper);
// Random quota map over the oracle vocabulary, values in {1, 2}.
StringMap<std::size_t> random_quotas(std::mt19937_64& rng);

// Round-trip vocabulary: base tokens b0..b29, each with exactly one synonym
// partner p0..p29 at cosine 0.9; all cross pairs orthogonal.
EmbeddingTable roundtrip_table();
// Sentence of distinct base tokens; redundancy-free by construction.
Sentence random_clean_base(std::mt19937_64& rng, std::size_t min_length,
                           std::size_t max_length);

}  // namespace redumet::testing
