// Copyright 2026 the beta-chains authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <cstddef>

namespace betachains {

// All numeric tolerances live here so the CLI can override them from one
// config block. Values are the defaults used throughout the test suites.
struct Tolerances {
  // Polynomial evaluation residual allowed at a cached root (relative).
  double poly_eval = 1e-9;
  // Imaginary parts below imag_truncate * scale are zeroed by the root
  // finder; anything larger raises NotRealRooted.
  double imag_truncate = 1e-7;
  // Roots closer than this (times scale) are considered clustered when
  // reporting; no merging is performed.
  double root_cluster = 1e-6;
  // Interlacing violations up to clamp * scale are clamped back into the
  // bracket; larger ones raise KernelNumericalFailure.
  double interlace_clamp = 1e-9;
  // Round-trip identity for Newton's relations (relative).
  double newton_roundtrip = 1e-12;
  // Maximum polynomial degree accepted by the companion-matrix root finder.
  int max_companion_degree = 60;
  // Stored prefix capacity for boundary points.
  std::size_t alpha_prefix_capacity = 64;
};

/// Mutable process-wide tolerance block. Set it once at startup (the CLI
/// does this from its JSON config) before spawning worker threads.
inline Tolerances& tolerances() noexcept {
  static Tolerances t;
  return t;
}

}  // namespace betachains
