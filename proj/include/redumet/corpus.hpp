// Copyright 2026 The redumet Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "redumet/types.hpp"

namespace redumet {

// Splits a pre-tokenized line on whitespace. Total: an empty or blank line
// yields an empty sentence.
Sentence tokenize_line(std::string_view line);

// Reads three aligned one-sentence-per-line files. Throws LineCountMismatch
// if the files disagree in length, IoError if any file cannot be read.
std::vector<EvalInstance> load_parallel(const std::string& src_path,
                                        const std::string& hyp_path,
                                        const std::string& ref_path);

// Annotation TSV: sentence_id, pos_a, pos_b, type code (CR|CS|DR|DS), system
// label. Lines starting with '#' and blank lines are skipped. Throws
// ParseError (with line number) on malformed rows, InvariantViolation on
// rows that violate the tuple position rules.
std::vector<AnnotationTuple> parse_annotations(const std::string& path);
std::vector<AnnotationTuple> parse_annotations(std::istream& in,
                                               const std::string& name);

void serialize_annotations(const std::vector<AnnotationTuple>& tuples,
                           std::ostream& out);

}  // namespace redumet
