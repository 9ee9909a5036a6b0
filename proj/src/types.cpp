// Copyright 2026 The redumet Authors
// SPDX-License-Identifier: Apache-2.0

#include "redumet/types.hpp"

#include "redumet/errors.hpp"
#include "redumet/text_util.hpp"

namespace redumet {

Token::Token(std::string s) : surface(std::move(s)) {
  if (surface.empty()) {
    throw InvariantViolation("token surface must be non-empty");
  }
  for (char c : surface) {
    if (is_ascii_space(c)) {
      throw InvariantViolation("token surface contains whitespace: '" +
                               surface + "'");
    }
  }
  is_continuation = surface.size() >= 2 &&
                    surface.compare(surface.size() - 2, 2, "@@") == 0;
}

std::string to_line(const Sentence& sentence) {
  std::string out;
  for (std::size_t i = 0; i < sentence.size(); ++i) {
    if (i > 0) out += ' ';
    out += sentence[i].surface;
  }
  return out;
}

Category category_of(RedundancyType type) {
  switch (type) {
    case RedundancyType::ContRep:
    case RedundancyType::ContSyn:
      return Category::Continuous;
    case RedundancyType::DiscRep:
    case RedundancyType::DiscSyn:
      return Category::Discontinuous;
  }
  return Category::Continuous;
}

Kind kind_of(RedundancyType type) {
  switch (type) {
    case RedundancyType::ContRep:
    case RedundancyType::DiscRep:
      return Kind::Repetition;
    case RedundancyType::ContSyn:
    case RedundancyType::DiscSyn:
      return Kind::Synonym;
  }
  return Kind::Repetition;
}

std::string_view to_code(RedundancyType type) {
  switch (type) {
    case RedundancyType::ContRep:
      return "CR";
    case RedundancyType::ContSyn:
      return "CS";
    case RedundancyType::DiscRep:
      return "DR";
    case RedundancyType::DiscSyn:
      return "DS";
  }
  return "CR";
}

std::optional<RedundancyType> type_from_code(std::string_view code) {
  if (code == "CR") return RedundancyType::ContRep;
  if (code == "CS") return RedundancyType::ContSyn;
  if (code == "DR") return RedundancyType::DiscRep;
  if (code == "DS") return RedundancyType::DiscSyn;
  return std::nullopt;
}

std::string_view to_string(Category category) {
  return category == Category::Continuous ? "continuous" : "discontinuous";
}

std::string_view to_string(Kind kind) {
  return kind == Kind::Repetition ? "repetition" : "synonym";
}

std::optional<Category> category_from_string(std::string_view s) {
  if (s == "continuous") return Category::Continuous;
  if (s == "discontinuous") return Category::Discontinuous;
  return std::nullopt;
}

std::optional<Kind> kind_from_string(std::string_view s) {
  if (s == "repetition") return Kind::Repetition;
  if (s == "synonym") return Kind::Synonym;
  return std::nullopt;
}

void AnnotationTuple::validate() const {
  if (pos_a >= pos_b) {
    throw InvariantViolation("annotation positions must satisfy pos_a < pos_b");
  }
  if (category_of(err_type) == Category::Continuous && pos_b != pos_a + 1) {
    throw InvariantViolation(
        "continuous annotation requires adjacent positions");
  }
}

}  // namespace redumet
