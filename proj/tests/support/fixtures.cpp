// Copyright 2026 The redumet Authors
// SPDX-License-Identifier: Apache-2.0

#include "support/fixtures.hpp"

#include <unistd.h>

#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "redumet/corpus.hpp"

namespace redumet::testing {

namespace fs = std::filesystem;

TempDir::TempDir() {
  static std::atomic<unsigned> counter{0};
  std::ostringstream name;
  name << "redumet_test_" << ::getpid() << "_" << counter++;
  fs::path dir = fs::temp_directory_path() / name.str();
  fs::create_directories(dir);
  root_ = dir.string();
}

TempDir::~TempDir() {
  std::error_code ec;
  fs::remove_all(root_, ec);
}

std::string TempDir::path(std::string_view name) const {
  return (fs::path(root_) / name).string();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("fixture cannot write " + path);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("fixture cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Sentence sentence(std::string_view line) { return tokenize_line(line); }

EvalInstance make_instance(std::size_t id, std::string_view src,
                           std::string_view hyp, std::string_view ref) {
  EvalInstance instance;
  instance.id = id;
  instance.source = sentence(src);
  instance.hypothesis = sentence(hyp);
  instance.reference = sentence(ref);
  return instance;
}

EmbeddingTable table1() {
  EmbeddingTable table(2);
  table.add("ate", {1.0, 0.0});
  table.add("had", {0.9, std::sqrt(0.19)});
  table.add("pizza", {0.0, 1.0});
  table.add("tonight", {0.6, -0.8});
  return table;
}

std::string table1_text() {
  std::ostringstream out;
  out << "4 2\n";
  out << "ate 1.0 0.0\n";
  out << "had 0.9 0.43588989435406735\n";
  out << "pizza 0.0 1.0\n";
  out << "tonight 0.6 -0.8\n";
  return out.str();
}

namespace {

// Each synonym pair lives in its own 2-D subspace, so cross-pair cosines
// are exactly 0.
void add_pair(EmbeddingTable& table, const std::string& a,
              const std::string& b, std::size_t axis, double cosine) {
  std::vector<double> u(table.dimension(), 0.0);
  std::vector<double> v(table.dimension(), 0.0);
  u[axis] = 1.0;
  v[axis] = cosine;
  v[axis + 1] = std::sqrt(1.0 - cosine * cosine);
  table.add(a, u);
  table.add(b, v);
}

void add_lone(EmbeddingTable& table, const std::string& token,
              std::size_t axis) {
  std::vector<double> u(table.dimension(), 0.0);
  u[axis] = 1.0;
  table.add(token, u);
}

}  // namespace

EmbeddingTable oracle_table() {
  EmbeddingTable table(12);
  add_lone(table, "w0", 0);
  add_pair(table, "w1", "w2", 1, 0.55);
  add_pair(table, "w3", "w4", 3, 0.75);
  add_pair(table, "w5", "w6", 5, 0.95);
  add_lone(table, "w7", 7);
  add_lone(table, "w8", 8);
  add_lone(table, "w9", 9);
  add_lone(table, "w10", 10);
  return table;
}

std::vector<std::pair<std::string, std::string>> oracle_pairs(double tau) {
  std::vector<std::pair<std::string, std::string>> pairs;
  if (0.55 > tau) pairs.emplace_back("w1", "w2");
  if (0.75 > tau) pairs.emplace_back("w3", "w4");
  if (0.95 > tau) pairs.emplace_back("w5", "w6");
  return pairs;
}

Sentence random_oracle_sentence(std::mt19937_64& rng, std::size_t max_length,
                                bool include_upper) {
  static const char* kLower[] = {"w0", "w1", "w2", "w3", "w4", "w5", "w6",
                                 "w7", "w8", "w9", "w10", "w11"};
  static const char* kUpper[] = {"W1", "W5", "W11"};
  const std::size_t length = 1 + rng() % max_length;
  Sentence out;
  out.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    if (include_upper && rng() % 5 == 0) {
      out.emplace_back(std::string(kUpper[rng() % 3]));
    } else {
      out.emplace_back(std::string(kLower[rng() % 12]));
    }
  }
  return out;
}

StringMap<std::size_t> random_quotas(std::mt19937_64& rng) {
  StringMap<std::size_t> quotas;
  for (int v = 0; v < 12; ++v) {
    if (rng() % 3 == 0) {
      quotas.emplace("w" + std::to_string(v), 1 + rng() % 2);
    }
  }
  return quotas;
}

EmbeddingTable roundtrip_table() {
  EmbeddingTable table(60);
  for (std::size_t i = 0; i < 30; ++i) {
    add_pair(table, "b" + std::to_string(i), "p" + std::to_string(i), 2 * i,
             0.9);
  }
  return table;
}

Sentence random_clean_base(std::mt19937_64& rng, std::size_t min_length,
                           std::size_t max_length) {
  const std::size_t length =
      min_length + rng() % (max_length - min_length + 1);
  std::vector<std::size_t> ids(30);
  for (std::size_t i = 0; i < 30; ++i) ids[i] = i;
  // Partial Fisher-Yates; the prefix is a distinct random sample.
  for (std::size_t i = 0; i < length; ++i) {
    std::size_t j = i + rng() % (30 - i);
    std::swap(ids[i], ids[j]);
  }
  Sentence out;
  out.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    out.emplace_back("b" + std::to_string(ids[i]));
  }
  return out;
}

}  // namespace redumet::testing
