// Copyright 2026 The redumet Authors
// SPDX-License-Identifier: Apache-2.0

#include "redumet/embedding.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "redumet/errors.hpp"

namespace redumet {

void EmbeddingTable::add(std::string token, const std::vector<double>& values) {
  if (dimension_ == 0 && tokens_.empty()) {
    dimension_ = values.size();
  }
  if (values.size() != dimension_) {
    std::ostringstream msg;
    msg << "embedding for '" << token << "' has " << values.size()
        << " values, expected " << dimension_;
    throw InvariantViolation(msg.str());
  }
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw InvariantViolation("embedding for '" + token +
                               "' has a non-finite entry");
    }
  }
  if (index_.find(token) != index_.end()) {
    throw DuplicateToken("duplicate embedding token '" + token + "'");
  }
  double sq = 0.0;
  for (double v : values) sq += v * v;
  index_.emplace(token, tokens_.size());
  tokens_.push_back(std::move(token));
  values_.insert(values_.end(), values.begin(), values.end());
  norms_.push_back(std::sqrt(sq));
}

std::optional<std::size_t> EmbeddingTable::find(std::string_view token) const {
  auto it = index_.find(token);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::span<const double> EmbeddingTable::vector_at(std::size_t index) const {
  return std::span<const double>(values_.data() + index * dimension_,
                                 dimension_);
}

double EmbeddingTable::norm_at(std::size_t index) const {
  return norms_[index];
}

namespace {

double parse_double_field(std::string_view field, const std::string& path,
                          std::size_t line_no) {
  double value = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
    std::ostringstream msg;
    msg << path << ":" << line_no << ": bad embedding value '" << field << "'";
    throw FormatError(msg.str());
  }
  return value;
}

std::size_t parse_size_field(std::string_view field, const std::string& path,
                             std::size_t line_no, const char* what) {
  std::size_t value = 0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    std::ostringstream msg;
    msg << path << ":" << line_no << ": bad " << what << " '" << field << "'";
    throw FormatError(msg.str());
  }
  return value;
}

}  // namespace

EmbeddingTable load_embeddings(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open embedding file: " + path);
  }
  std::string line;
  if (!std::getline(in, line)) {
    throw FormatError(path + ":1: missing header line");
  }
  auto header = split_whitespace(line);
  if (header.size() != 2) {
    throw FormatError(path + ":1: header must be 'V D'");
  }
  const std::size_t vocab = parse_size_field(header[0], path, 1, "vocab size");
  const std::size_t dim = parse_size_field(header[1], path, 1, "dimension");
  if (dim == 0) {
    throw FormatError(path + ":1: dimension must be positive");
  }

  EmbeddingTable table(dim);
  std::vector<double> row(dim);
  for (std::size_t i = 0; i < vocab; ++i) {
    const std::size_t line_no = i + 2;
    if (!std::getline(in, line)) {
      std::ostringstream msg;
      msg << path << ": expected " << vocab << " rows, got " << i;
      throw FormatError(msg.str());
    }
    auto fields = split_whitespace(line);
    if (fields.size() != dim + 1) {
      std::ostringstream msg;
      msg << path << ":" << line_no << ": expected token plus " << dim
          << " values, got " << fields.size() << " fields";
      throw FormatError(msg.str());
    }
    for (std::size_t d = 0; d < dim; ++d) {
      row[d] = parse_double_field(fields[d + 1], path, line_no);
    }
    if (table.find(fields[0])) {
      std::ostringstream msg;
      msg << path << ":" << line_no << ": duplicate token '" << fields[0]
          << "'";
      throw DuplicateToken(msg.str());
    }
    table.add(std::string(fields[0]), row);
  }
  while (std::getline(in, line)) {
    if (!split_whitespace(line).empty()) {
      throw FormatError(path + ": trailing content after " +
                        std::to_string(vocab) + " rows");
    }
  }
  if (in.bad()) {
    throw IoError("read failure on embedding file: " + path);
  }
  return table;
}

double cosine_similarity(std::span<const double> u,
                         std::span<const double> v) {
  double dot = 0.0, uu = 0.0, vv = 0.0;
  const std::size_t n = u.size() < v.size() ? u.size() : v.size();
  for (std::size_t i = 0; i < n; ++i) {
    dot += u[i] * v[i];
    uu += u[i] * u[i];
    vv += v[i] * v[i];
  }
  if (uu == 0.0 || vv == 0.0) return 0.0;
  return dot / (std::sqrt(uu) * std::sqrt(vv));
}

double similarity(const EmbeddingTable& table, std::size_t i, std::size_t j) {
  const double ni = table.norm_at(i);
  const double nj = table.norm_at(j);
  if (ni == 0.0 || nj == 0.0) return 0.0;
  std::span<const double> u = table.vector_at(i);
  std::span<const double> v = table.vector_at(j);
  double dot = 0.0;
  for (std::size_t d = 0; d < u.size(); ++d) dot += u[d] * v[d];
  return dot / (ni * nj);
}

bool is_synonym(const Token& t1, const Token& t2, const EmbeddingTable& table,
                const SynonymConfig& config) {
  const std::string k1 = match_key(t1.surface, config.lowercase);
  const std::string k2 = match_key(t2.surface, config.lowercase);
  if (k1 == k2) return false;  // equal surfaces are repetition, not synonymy
  if (config.excluded.contains(k1) || config.excluded.contains(k2)) {
    return false;
  }
  auto i = table.find(k1);
  auto j = table.find(k2);
  if (!i || !j) return false;
  return similarity(table, *i, *j) > config.tau;
}

StringSet embedding_stopwords(const EmbeddingTable& table, std::size_t k_cjk,
                              std::size_t k_other) {
  StringSet out;
  std::size_t taken_cjk = 0, taken_other = 0;
  for (const std::string& token : table.tokens()) {
    if (taken_cjk >= k_cjk && taken_other >= k_other) break;
    if (contains_cjk(token)) {
      if (taken_cjk < k_cjk) {
        out.insert(token);
        ++taken_cjk;
      }
    } else if (taken_other < k_other) {
      out.insert(token);
      ++taken_other;
    }
  }
  return out;
}

}  // namespace redumet
