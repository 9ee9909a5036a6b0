// Copyright 2026 The redumet Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace redumet {

// One whitespace-delimited unit of a pre-tokenized sentence. Subword
// continuation pieces keep their trailing "@@" marker as part of the surface.
struct Token {
  std::string surface;
  bool is_continuation = false;

  // Throws InvariantViolation if the surface is empty or contains whitespace.
  explicit Token(std::string s);

  bool operator==(const Token& other) const = default;
};

using Sentence = std::vector<Token>;

// Joins surfaces with single spaces.
std::string to_line(const Sentence& sentence);

// Aligned (source, hypothesis, reference) triple; id is the 0-based line
// number shared by the three corpus files.
struct EvalInstance {
  std::size_t id = 0;
  Sentence source;
  Sentence hypothesis;
  Sentence reference;
};

enum class Category { Continuous, Discontinuous };
enum class Kind { Repetition, Synonym };

// The four error types: {Continuous, Discontinuous} x {Repetition, Synonym}.
enum class RedundancyType { ContRep, ContSyn, DiscRep, DiscSyn };

Category category_of(RedundancyType type);
Kind kind_of(RedundancyType type);

// Two-letter file codes: CR, CS, DR, DS.
std::string_view to_code(RedundancyType type);
std::optional<RedundancyType> type_from_code(std::string_view code);

std::string_view to_string(Category category);
std::string_view to_string(Kind kind);
std::optional<Category> category_from_string(std::string_view s);
std::optional<Kind> kind_from_string(std::string_view s);

// One annotated redundancy case: hypothesis positions pos_a < pos_b are
// mutually redundant, pos_b being the redundant later token. Continuous
// types require pos_b == pos_a + 1.
struct AnnotationTuple {
  std::size_t sentence_id = 0;
  std::size_t pos_a = 0;
  std::size_t pos_b = 0;
  RedundancyType err_type = RedundancyType::ContRep;
  std::string system;

  // Checks the position invariants; throws InvariantViolation.
  void validate() const;

  bool operator==(const AnnotationTuple& other) const = default;
};

}  // namespace redumet
