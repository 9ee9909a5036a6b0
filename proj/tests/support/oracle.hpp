// Copyright 2026 The redumet Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace redumet::testing {

struct OracleFlag {
  std::size_t position = 0;
  bool continuous = false;
  bool synonym = false;
  std::size_t partner = 0;
  bool exempted = false;

  bool operator==(const OracleFlag&) const = default;
};

// Direct transcription of the scoring rules, kept deliberately naive as a
// cross-check: synonymy comes from an explicit pair list instead of vector
// similarity, and everything is plain loops over ordered containers.
//
// A token is continuous-redundant when it repeats or is a synonym of its
// left neighbor; no exemptions.  A token without a continuous flag and not
// in the stopword set is discontinuous-redundant when any position at least
// two to its left matches; quotas (keyed by the matching form) absorb
// matches left to right as exemptions until exhausted.
std::vector<OracleFlag> oracle_detect(
    const std::vector<std::string>& tokens,
    const std::vector<std::pair<std::string, std::string>>& synonym_pairs,
    const std::set<std::string>& stopwords,
    std::map<std::string, std::size_t> quotas, bool lowercase);

}  // namespace redumet::testing
