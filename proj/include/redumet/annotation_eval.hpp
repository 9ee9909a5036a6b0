// Copyright 2026 The redumet Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "redumet/detector.hpp"
#include "redumet/types.hpp"

namespace redumet {

struct PrfScores {
  double precision = 1.0;
  double recall = 1.0;
  double f1 = 1.0;
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
};

// Empty denominators score 1 (nothing predicted / nothing gold is clean).
PrfScores prf_from_counts(std::size_t tp, std::size_t fp, std::size_t fn);

// Harmonic mean; 0 when precision + recall == 0.
double f1_score(double precision, double recall);

// Matches counted flags of `category` against gold tuples of the same
// category on (sentence_id, later position) pairs.  Repetition and synonym
// subtypes pool together on both sides.
PrfScores evaluate(const CorpusReport& report,
                   const std::vector<AnnotationTuple>& gold,
                   Category category);

// Cohen's kappa over binary per-position labels.  `universe` lists
// (sentence_id, length) pairs defining the label space; a position is
// positive for an annotator iff it is some tuple's pos_b.
double pairwise_kappa(
    const std::vector<AnnotationTuple>& labels_a,
    const std::vector<AnnotationTuple>& labels_b,
    const std::vector<std::pair<std::size_t, std::size_t>>& universe);

}  // namespace redumet

