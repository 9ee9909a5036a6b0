// Copyright 2026 The redumet Authors
// SPDX-License-Identifier: Apache-2.0

#include "redumet/annotation_eval.hpp"

#include <set>
#include <sstream>
#include <unordered_map>

#include "redumet/errors.hpp"

namespace redumet {

PrfScores prf_from_counts(std::size_t tp, std::size_t fp, std::size_t fn) {
  PrfScores s;
  s.tp = tp;
  s.fp = fp;
  s.fn = fn;
  s.precision = (tp + fp == 0)
                    ? 1.0
                    : static_cast<double>(tp) / static_cast<double>(tp + fp);
  s.recall = (tp + fn == 0)
                 ? 1.0
                 : static_cast<double>(tp) / static_cast<double>(tp + fn);
  s.f1 = f1_score(s.precision, s.recall);
  return s;
}

double f1_score(double precision, double recall) {
  const double denom = precision + recall;
  if (denom == 0.0) return 0.0;
  return 2.0 * precision * recall / denom;
}

PrfScores evaluate(const CorpusReport& report,
                   const std::vector<AnnotationTuple>& gold,
                   Category category) {
  std::set<std::pair<std::size_t, std::size_t>> predicted;
  std::set<std::size_t> known_ids;
  for (const SentenceReport& sent : report.sentence_reports) {
    known_ids.insert(sent.id);
    for (const TokenFlag& flag : sent.flags) {
      if (flag.exempted || flag.category != category) continue;
      predicted.emplace(sent.id, flag.position);
    }
  }

  std::set<std::pair<std::size_t, std::size_t>> gold_set;
  for (const AnnotationTuple& tuple : gold) {
    if (!known_ids.contains(tuple.sentence_id)) {
      std::ostringstream msg;
      msg << "annotation references sentence " << tuple.sentence_id
          << " absent from the report";
      throw UnknownSentenceId(msg.str());
    }
    if (category_of(tuple.err_type) != category) continue;
    gold_set.emplace(tuple.sentence_id, tuple.pos_b);
  }

  std::size_t tp = 0;
  for (const auto& p : predicted) {
    if (gold_set.contains(p)) ++tp;
  }
  return prf_from_counts(tp, predicted.size() - tp, gold_set.size() - tp);
}

namespace {

std::set<std::pair<std::size_t, std::size_t>> positive_positions(
    const std::vector<AnnotationTuple>& tuples,
    const std::unordered_map<std::size_t, std::size_t>& lengths) {
  std::set<std::pair<std::size_t, std::size_t>> out;
  for (const AnnotationTuple& tuple : tuples) {
    auto it = lengths.find(tuple.sentence_id);
    if (it == lengths.end()) {
      std::ostringstream msg;
      msg << "annotation references sentence " << tuple.sentence_id
          << " absent from the universe";
      throw UnknownSentenceId(msg.str());
    }
    if (tuple.pos_b >= it->second) {
      std::ostringstream msg;
      msg << "annotation position " << tuple.pos_b << " out of range for "
          << "sentence " << tuple.sentence_id << " of length " << it->second;
      throw InvariantViolation(msg.str());
    }
    out.emplace(tuple.sentence_id, tuple.pos_b);
  }
  return out;
}

}  // namespace

double pairwise_kappa(
    const std::vector<AnnotationTuple>& labels_a,
    const std::vector<AnnotationTuple>& labels_b,
    const std::vector<std::pair<std::size_t, std::size_t>>& universe) {
  std::unordered_map<std::size_t, std::size_t> lengths;
  std::size_t total = 0;
  for (const auto& [id, length] : universe) {
    lengths.emplace(id, length);
    total += length;
  }
  if (total == 0) {
    throw EmptyUniverse("kappa universe has no positions");
  }

  const auto pos_a = positive_positions(labels_a, lengths);
  const auto pos_b = positive_positions(labels_b, lengths);

  std::size_t both = 0;
  for (const auto& p : pos_a) {
    if (pos_b.contains(p)) ++both;
  }
  const std::size_t only_a = pos_a.size() - both;
  const std::size_t only_b = pos_b.size() - both;
  const std::size_t neither = total - both - only_a - only_b;

  const double n = static_cast<double>(total);
  const double p_o = (static_cast<double>(both) + neither) / n;
  const double rate_a = static_cast<double>(pos_a.size()) / n;
  const double rate_b = static_cast<double>(pos_b.size()) / n;
  const double p_e = rate_a * rate_b + (1.0 - rate_a) * (1.0 - rate_b);
  if (p_e == 1.0) return 1.0;  // degenerate identical marginals
  return (p_o - p_e) / (1.0 - p_e);
}

}  // namespace redumet
