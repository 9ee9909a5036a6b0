// Copyright 2026 The redumet Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "redumet/embedding.hpp"
#include "redumet/lexicon.hpp"
#include "redumet/types.hpp"

namespace redumet {

struct PerturbationSpec {
  RedundancyType err_type = RedundancyType::ContRep;
  std::size_t count = 1;
  std::uint64_t seed = 0;
  // Minimum index distance between a discontinuous insertion and its source;
  // must stay >= 2 or the pair would be adjacent.
  std::size_t min_gap = 2;

  void validate() const;
};

struct PerturbResult {
  Sentence sentence;
  // Gold tuples in perturbed-sentence indices, sorted by pos_b.  sentence_id
  // is left at 0 and system at "perturb"; callers relabel per corpus line.
  std::vector<AnnotationTuple> gold;
};

// Injects `spec.count` redundancy errors into `base`.  Site and payload
// eligibility is restricted (no stopwords, no token redundant with another
// base token, payloads mutually non-redundant, one insertion per source) so
// that on a redundancy-free base the detector recovers exactly the emitted
// gold set.  Throws NoEligibleSite when the base cannot host the request.
PerturbResult perturb(const Sentence& base, const PerturbationSpec& spec,
                      const EmbeddingTable& table, const SynonymConfig& config,
                      const StopwordSet& stopwords = StopwordSet{});

}  // namespace redumet

