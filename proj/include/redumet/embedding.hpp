// Copyright 2026 The redumet Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "redumet/text_util.hpp"
#include "redumet/types.hpp"

namespace redumet {

// Token vectors in the order they appear in the source file. That order is
// treated as frequency rank order, which the dictionary stopword rule relies
// on.
class EmbeddingTable {
 public:
  EmbeddingTable() = default;
  explicit EmbeddingTable(std::size_t dimension) : dimension_(dimension) {}

  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return tokens_.size(); }
  bool empty() const { return tokens_.empty(); }

  // Rank order.
  const std::vector<std::string>& tokens() const { return tokens_; }

  // Throws DuplicateToken on a repeated token and InvariantViolation on a
  // dimension mismatch or non-finite entry.
  void add(std::string token, const std::vector<double>& values);

  std::optional<std::size_t> find(std::string_view token) const;
  std::span<const double> vector_at(std::size_t index) const;
  double norm_at(std::size_t index) const;

 private:
  std::size_t dimension_ = 0;
  std::vector<std::string> tokens_;
  std::vector<double> values_;  // size() * dimension_, row-major
  std::vector<double> norms_;
  StringMap<std::size_t> index_;
};

// Matching parameters for the synonym predicate.
struct SynonymConfig {
  // Cosine threshold; two distinct in-table tokens are synonyms when their
  // similarity is strictly greater than tau. Must lie in (0, 1].
  double tau = 0.8;
  // Tokens barred from synonym matching, stored in match-key form (i.e.
  // already lowercased when `lowercase` is set).
  StringSet excluded;
  bool lowercase = false;
};

// Text format: header "V D", then V rows "token v1 ... vD". Throws
// FormatError with the offending line number, DuplicateToken, IoError.
EmbeddingTable load_embeddings(const std::string& path);

// Zero if either vector has zero norm.
double cosine_similarity(std::span<const double> u, std::span<const double> v);

// Cosine between two table rows, using the precomputed norms.
double similarity(const EmbeddingTable& table, std::size_t i, std::size_t j);

// True iff both tokens resolve to table entries, neither is excluded, their
// match keys differ, and cosine similarity exceeds config.tau. Out-of-table
// tokens simply yield false.
bool is_synonym(const Token& t1, const Token& t2, const EmbeddingTable& table,
                const SynonymConfig& config);

// The first k_cjk tokens containing a CJK codepoint plus the first k_other
// tokens containing none, scanning in rank order. Top-frequency dictionary
// entries have degenerate embeddings, so they are excluded from synonym
// matching.
StringSet embedding_stopwords(const EmbeddingTable& table, std::size_t k_cjk,
                              std::size_t k_other);

}  // namespace redumet
