// Copyright 2026 The redumet Authors
// SPDX-License-Identifier: Apache-2.0

#include "redumet/embedding.hpp"

#include <cmath>

#include "doctest.h"
#include "redumet/errors.hpp"
#include "support/fixtures.hpp"

using namespace redumet;
using redumet::testing::TempDir;
using redumet::testing::write_file;

namespace {

Token tok(const char* s) { return Token(std::string(s)); }

}  // namespace

TEST_CASE("load_embeddings reads the V D header format") {
  TempDir dir;
  write_file(dir.path("emb"),
             "3 4\n"
             "alpha 1 0 0 0\n"
             "beta 0 1 0 0\n"
             "gamma 0.5 0.5 0.5 0.5\n");
  EmbeddingTable table = load_embeddings(dir.path("emb"));
  CHECK(table.size() == 3);
  CHECK(table.dimension() == 4);
  REQUIRE(table.find("gamma").has_value());
  CHECK(*table.find("alpha") == 0);
  CHECK(*table.find("gamma") == 2);
  CHECK_FALSE(table.find("delta").has_value());
  CHECK(table.tokens() ==
        std::vector<std::string>{"alpha", "beta", "gamma"});
  CHECK(table.norm_at(0) == doctest::Approx(1.0));
  CHECK(table.vector_at(1)[1] == 1.0);
}

TEST_CASE("load_embeddings rejects malformed files") {
  TempDir dir;
  auto expect_format_error = [&](const char* name, const char* text,
                                 const char* needle) {
    write_file(dir.path(name), text);
    try {
      load_embeddings(dir.path(name));
      FAIL_CHECK("expected FormatError for " << name);
    } catch (const FormatError& e) {
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };
  expect_format_error("short_row", "2 4\na 1 0 0 0\nb 1 0 0\n", ":3");
  expect_format_error("bad_value", "1 2\na 1.0 oops\n", "oops");
  expect_format_error("bad_header", "x 4\na 1 0 0 0\n", ":1");
  expect_format_error("missing_rows", "3 2\na 1 0\n", "expected 3 rows");
  expect_format_error("trailing", "1 2\na 1 0\nb 1 0\n", "trailing");

  write_file(dir.path("dup"), "2 2\nate 1 0\nate 0 1\n");
  CHECK_THROWS_AS(load_embeddings(dir.path("dup")), DuplicateToken);

  CHECK_THROWS_AS(load_embeddings(dir.path("absent")), IoError);
}

TEST_CASE("table add enforces dimension and finiteness") {
  EmbeddingTable table(2);
  table.add("a", {1.0, 0.0});
  CHECK_THROWS_AS(table.add("b", {1.0}), InvariantViolation);
  CHECK_THROWS_AS(table.add("c", {1.0, std::nan("")}), InvariantViolation);
  CHECK_THROWS_AS(table.add("a", {0.0, 1.0}), DuplicateToken);
}

TEST_CASE("cosine_similarity basics") {
  std::vector<double> x{1.0, 0.0};
  std::vector<double> y{0.0, 1.0};
  std::vector<double> x4{4.0, 0.0};
  std::vector<double> zero{0.0, 0.0};
  CHECK(cosine_similarity(x, x) == doctest::Approx(1.0));
  CHECK(cosine_similarity(x, y) == doctest::Approx(0.0));
  CHECK(cosine_similarity(x, x4) == doctest::Approx(1.0));  // scale invariant
  CHECK(cosine_similarity(x, zero) == 0.0);
  CHECK(cosine_similarity(zero, zero) == 0.0);
}

TEST_CASE("is_synonym applies threshold, exclusion, and OOV rules") {
  EmbeddingTable table = redumet::testing::table1();
  SynonymConfig config;  // tau 0.8

  CHECK(is_synonym(tok("ate"), tok("had"), table, config));
  CHECK(is_synonym(tok("had"), tok("ate"), table, config));  // symmetric
  CHECK_FALSE(is_synonym(tok("ate"), tok("ate"), table, config));
  CHECK_FALSE(is_synonym(tok("ate"), tok("zebra"), table, config));
  CHECK_FALSE(is_synonym(tok("ate"), tok("pizza"), table, config));

  SynonymConfig strict = config;
  strict.tau = 0.95;
  CHECK_FALSE(is_synonym(tok("ate"), tok("had"), table, strict));

  SynonymConfig excluding = config;
  excluding.excluded.insert("had");
  CHECK_FALSE(is_synonym(tok("ate"), tok("had"), table, excluding));
  CHECK_FALSE(is_synonym(tok("had"), tok("ate"), table, excluding));
}

TEST_CASE("is_synonym honors lowercase matching") {
  EmbeddingTable table = redumet::testing::table1();
  SynonymConfig config;
  CHECK_FALSE(is_synonym(tok("ATE"), tok("had"), table, config));  // OOV
  config.lowercase = true;
  CHECK(is_synonym(tok("ATE"), tok("had"), table, config));
  // Same match key: repetition territory, not synonymy.
  CHECK_FALSE(is_synonym(tok("ATE"), tok("ate"), table, config));
}

TEST_CASE("zero-norm vectors never match") {
  EmbeddingTable table(2);
  table.add("null", {0.0, 0.0});
  table.add("unit", {1.0, 0.0});
  SynonymConfig config;
  config.tau = 0.1;
  CHECK(similarity(table, 0, 1) == 0.0);
  CHECK_FALSE(is_synonym(tok("null"), tok("unit"), table, config));
}

TEST_CASE("embedding_stopwords takes rank-order heads per script") {
  EmbeddingTable table(2);
  table.add("的", {1, 0});
  table.add("the", {1, 0});
  table.add("，", {1, 0});
  table.add(",", {1, 0});
  table.add("。", {1, 0});
  table.add("is", {1, 0});
  table.add("哈", {1, 0});

  StringSet set = embedding_stopwords(table, 3, 2);
  CHECK(set.size() == 5);
  CHECK(set.contains("的"));
  CHECK(set.contains("，"));
  CHECK(set.contains("。"));
  CHECK(set.contains("the"));
  CHECK(set.contains(","));
  CHECK_FALSE(set.contains("哈"));  // fourth CJK token
  CHECK_FALSE(set.contains("is"));  // third non-CJK token

  CHECK(embedding_stopwords(table, 0, 0).empty());
  CHECK(embedding_stopwords(EmbeddingTable{}, 3, 10).empty());

  // Truncation when the table runs out.
  EmbeddingTable small(1);
  small.add("x", {1});
  small.add("y", {1});
  CHECK(embedding_stopwords(small, 3, 10).size() == 2);
}
