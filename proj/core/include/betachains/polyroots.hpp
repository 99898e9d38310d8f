// Copyright 2026 the beta-chains authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <optional>
#include <vector>

#include "betachains/errors.hpp"

namespace betachains {

// Monic polynomial guaranteed (by construction context) to have only real
// roots. Coefficients are stored ascending: coeffs[k] multiplies z^k and
// coeffs[degree] == 1 exactly. When the roots are known they are cached
// nonincreasing.
class RealRootedPoly {
 public:
  /// From ascending coefficients; the leading coefficient must be 1.
  explicit RealRootedPoly(std::vector<double> coeffs);
  RealRootedPoly(std::vector<double> coeffs, std::vector<double> roots);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<double>& coeffs() const { return coeffs_; }
  const std::optional<std::vector<double>>& cached_roots() const { return roots_; }

  double eval(double z) const;
  double eval_derivative(double z) const;

 private:
  std::vector<double> coeffs_;
  std::optional<std::vector<double>> roots_;
};

/// Expands prod (z - r_i) by stable incremental multiplication and caches
/// the roots. Input need not be sorted; the cache is sorted nonincreasing.
RealRootedPoly poly_from_roots(std::vector<double> roots);

// All real roots counted with multiplicity, nonincreasing. Companion-matrix
// eigenvalues with coefficient scaling; degrees above
// tolerances().max_companion_degree are rejected. Imaginary parts beyond
// imag_truncate * scale raise NotRealRooted (caller contract violation).
std::vector<double> real_roots(const RealRootedPoly& p);

/// Derivative; divided by the degree when normalize_monic is set.
RealRootedPoly derivative(const RealRootedPoly& p, bool normalize_monic);

// Newton's relations between power sums s_1..s_K and elementary symmetric
// functions e_1..e_K:  j e_j = sum_{k=1}^{j} (-1)^{k-1} e_{j-k} s_k.
std::vector<double> power_sums_to_elementary(const std::vector<double>& s);
std::vector<double> elementary_to_power_sums(const std::vector<double>& e);

/// N-th Hermite polynomial in the (z - d/dz)^N (1) normalization, via the
/// recurrence H_{N+1} = z H_N - H_N'.
RealRootedPoly hermite(int n);

// Roots of the secular equation sum_j w_j / (z - b_j) = 0 for strictly
// decreasing b and positive weights w. The function is strictly decreasing
// between consecutive poles, so there is exactly one root per gap; returned
// nonincreasing (length b.size() - 1). This is the root set of
// sum_j w_j prod_{k != j} (z - b_k), used by the Dixon-Anderson kernel.
std::vector<double> secular_interlaced_roots(const std::vector<double>& b,
                                             const std::vector<double>& w);

}  // namespace betachains
