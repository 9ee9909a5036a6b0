// Copyright 2026 The redumet Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace redumet {

// Base class for every error thrown by the library. Messages carry the
// file path and line number where applicable.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : Error {
  using Error::Error;
};

// Parallel corpus files disagree in line count.
struct LineCountMismatch : Error {
  using Error::Error;
};

// Malformed row in a structured text file (TSV, embedding table).
struct ParseError : Error {
  using Error::Error;
};

struct FormatError : Error {
  using Error::Error;
};

struct DuplicateToken : Error {
  using Error::Error;
};

// A domain-type invariant would be violated by the requested construction.
struct InvariantViolation : Error {
  using Error::Error;
};

struct NoEligibleSite : Error {
  using Error::Error;
};

struct UnknownSentenceId : Error {
  using Error::Error;
};

struct EmptyUniverse : Error {
  using Error::Error;
};

}  // namespace redumet
