// Copyright 2026 The redumet Authors
// SPDX-License-Identifier: Apache-2.0

#include "redumet/lexicon.hpp"

#include <algorithm>
#include <fstream>
#include <utility>

#include "redumet/errors.hpp"

namespace redumet {

FrequencyTable count_frequencies(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open training file: " + path);
  }
  FrequencyTable freq;
  std::string line;
  while (std::getline(in, line)) {
    for (std::string_view tok : split_whitespace(line)) {
      auto it = freq.counts.find(tok);
      if (it == freq.counts.end()) {
        freq.counts.emplace(std::string(tok), 1);
      } else {
        ++it->second;
      }
      ++freq.total;
    }
  }
  if (in.bad()) {
    throw IoError("read failure on training file: " + path);
  }
  return freq;
}

StopwordSet load_stopwords(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open stopword file: " + path);
  }
  StopwordSet set;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto fields = split_whitespace(line);
    if (fields.empty()) continue;
    if (fields[0].front() == '#') continue;
    set.tokens.insert(std::string(fields[0]));
  }
  if (in.bad()) {
    throw IoError("read failure on stopword file: " + path);
  }
  return set;
}

void save_stopwords(const StopwordSet& set, const std::string& path) {
  std::vector<std::string> sorted(set.tokens.begin(), set.tokens.end());
  std::sort(sorted.begin(), sorted.end());
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot open stopword file for writing: " + path);
  }
  for (const std::string& tok : sorted) {
    out << tok << '\n';
  }
  out.flush();
  if (!out) {
    throw IoError("write failure on stopword file: " + path);
  }
}

StopwordSet derive_stopwords(const FrequencyTable& freq, std::size_t k) {
  std::vector<std::pair<std::string_view, std::uint64_t>> entries;
  entries.reserve(freq.counts.size());
  for (const auto& [tok, count] : freq.counts) {
    entries.emplace_back(tok, count);
  }
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (entries.size() > k) entries.resize(k);
  StopwordSet set;
  for (const auto& [tok, count] : entries) {
    set.tokens.insert(std::string(tok));
  }
  return set;
}

ExemptionLedger::ExemptionLedger(StringMap<std::size_t> quotas) {
  for (auto& [key, quota] : quotas) {
    if (quota == 0) continue;
    initial_.emplace(key, quota);
    remaining_.emplace(key, quota);
  }
}

std::size_t ExemptionLedger::quota(std::string_view key) const {
  auto it = initial_.find(key);
  return it == initial_.end() ? 0 : it->second;
}

bool ExemptionLedger::try_consume(std::string_view key) {
  auto it = remaining_.find(key);
  if (it == remaining_.end() || it->second == 0) return false;
  --it->second;
  return true;
}

namespace {

// Number of tokens in `sentence` equal to `probe` by key or synonymous with
// it under `config`.
std::size_t match_count(const Token& probe, std::string_view probe_key,
                        const Sentence& sentence, const EmbeddingTable& table,
                        const SynonymConfig& config) {
  std::size_t n = 0;
  for (const Token& tok : sentence) {
    if (match_key(tok.surface, config.lowercase) == probe_key ||
        is_synonym(probe, tok, table, config)) {
      ++n;
    }
  }
  return n;
}

}  // namespace

ExemptionLedger build_exemption_ledger(const EvalInstance& instance,
                                       const EmbeddingTable& table,
                                       const SynonymConfig& config) {
  StringMap<std::size_t> quotas;
  for (const Token& tok : instance.hypothesis) {
    std::string key = match_key(tok.surface, config.lowercase);
    if (quotas.find(key) != quotas.end()) continue;
    const std::size_t c_ref =
        match_count(tok, key, instance.reference, table, config);
    const std::size_t c_src =
        match_count(tok, key, instance.source, table, config);
    const std::size_t c = c_ref > c_src ? c_ref : c_src;
    if (c >= 2) {
      quotas.emplace(std::move(key), c - 1);
    }
  }
  return ExemptionLedger(std::move(quotas));
}

}  // namespace redumet
