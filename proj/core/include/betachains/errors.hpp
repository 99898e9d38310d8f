// Copyright 2026 the beta-chains authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <stdexcept>
#include <string>

namespace betachains {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A value fails a type invariant or an operation precondition.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A parameter is outside its admissible domain.
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// The root finder detected a complex pair beyond tolerance, i.e. the
/// caller's real-rootedness contract was violated.
class NotRealRooted : public Error {
 public:
  using Error::Error;
};

/// The explicit kernel density requires a strictly decreasing top row.
class DegenerateTopRow : public Error {
 public:
  using Error::Error;
};

/// A sampled point violated interlacing beyond the clamping tolerance.
class KernelNumericalFailure : public Error {
 public:
  using Error::Error;
};

/// A statistical routine received too few samples to be meaningful.
class InsufficientData : public Error {
 public:
  using Error::Error;
};

/// Coincident arguments where a formula requires distinct ones.
class DegenerateArguments : public Error {
 public:
  using Error::Error;
};

}  // namespace betachains
