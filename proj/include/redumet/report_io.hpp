// Copyright 2026 The redumet Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "redumet/detector.hpp"

namespace redumet {

// Inputs echoed into the JSON report's config block.  Optional paths stay
// empty when unused.
struct RunConfig {
  std::string src;
  std::string hyp;
  std::string ref;
  std::string embeddings;
  std::string stopword_file;
  std::string train_file;
  std::size_t stopword_k_cjk = 3;
  std::size_t stopword_k_other = 10;
  double tau = 0.8;
  bool lowercase = false;
};

// Fixed 6-decimal rendering used everywhere a ratio is serialized.
std::string format_ratio(double value);
// Two-decimal percentage for terminal summaries, e.g. "12.50%".
std::string format_percent(double value);

// Serializers emit keys in a fixed order with format_ratio numbers, so
// identical runs produce byte-identical files.
std::string render_report_json(const CorpusReport& report,
                               const RunConfig& config);
std::string render_report_tsv(const CorpusReport& report);

// Writes via a sibling temp file plus rename; failed runs leave no partial
// output at `path`.
void atomic_write(const std::string& path, const std::string& content);

void write_report_json(const CorpusReport& report, const RunConfig& config,
                       const std::string& path);
void write_report_tsv(const CorpusReport& report, const std::string& path);

// Parses a report produced by write_report_json.  Rejects unknown
// schema_version values.
CorpusReport read_report_json(const std::string& path);

}  // namespace redumet

