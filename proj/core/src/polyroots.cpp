// Copyright 2026 the beta-chains authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "betachains/polyroots.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <limits>

#include "betachains/config.hpp"

namespace betachains {

namespace {

void require_finite(const std::vector<double>& v, const char* what) {
  for (double x : v) {
    if (!std::isfinite(x)) throw InvalidInput(std::string(what) + ": non-finite entry");
  }
}

// Natural backward-error scale of p at z: sum_k |c_k z^k|.
double eval_scale(const std::vector<double>& c, double z) {
  double acc = 0.0, zp = 1.0;
  for (double ck : c) {
    acc += std::abs(ck) * std::abs(zp);
    zp *= z;
  }
  return acc;
}

}  // namespace

RealRootedPoly::RealRootedPoly(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() < 2) throw InvalidInput("RealRootedPoly: degree must be positive");
  require_finite(coeffs_, "RealRootedPoly");
  if (coeffs_.back() != 1.0) throw InvalidInput("RealRootedPoly: leading coefficient must be 1");
}

RealRootedPoly::RealRootedPoly(std::vector<double> coeffs, std::vector<double> roots)
    : RealRootedPoly(std::move(coeffs)) {
  if (roots.size() + 1 != coeffs_.size())
    throw InvalidInput("RealRootedPoly: root count does not match degree");
  require_finite(roots, "RealRootedPoly roots");
  if (!std::is_sorted(roots.rbegin(), roots.rend()))
    throw InvalidInput("RealRootedPoly: cached roots must be nonincreasing");
  const double tol = tolerances().poly_eval;
  for (double r : roots) {
    if (std::abs(eval(r)) > tol * (1.0 + eval_scale(coeffs_, r)))
      throw InvalidInput("RealRootedPoly: cached root fails residual check");
  }
  roots_ = std::move(roots);
}

double RealRootedPoly::eval(double z) const {
  double acc = 0.0;
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * z + coeffs_[k];
  return acc;
}

double RealRootedPoly::eval_derivative(double z) const {
  double acc = 0.0;
  for (std::size_t k = coeffs_.size(); k-- > 1;) acc = acc * z + coeffs_[k] * static_cast<double>(k);
  return acc;
}

RealRootedPoly poly_from_roots(std::vector<double> roots) {
  require_finite(roots, "poly_from_roots");
  if (roots.empty()) throw InvalidInput("poly_from_roots: need at least one root");
  std::vector<double> c{1.0};
  for (double r : roots) {
    c.push_back(0.0);
    for (std::size_t k = c.size() - 1; k > 0; --k) c[k] = c[k - 1] - r * c[k];
    c[0] = -r * c[0];
  }
  // The loop above shifted the leading 1 upward each round; c is ascending.
  std::sort(roots.begin(), roots.end(), std::greater<double>());
  return RealRootedPoly(std::move(c), std::move(roots));
}

std::vector<double> real_roots(const RealRootedPoly& p) {
  if (p.cached_roots()) return *p.cached_roots();
  const int n = p.degree();
  const auto& c = p.coeffs();
  if (n == 1) return {-c[0]};
  if (n == 2) {
    // Stable quadratic formula; a tiny negative discriminant is rounding.
    const double b = c[1], c0 = c[0];
    double disc = b * b - 4.0 * c0;
    const double scale = std::max(1.0, std::max(b * b, 4.0 * std::abs(c0)));
    if (disc < 0.0) {
      if (disc < -tolerances().imag_truncate * scale)
        throw NotRealRooted("real_roots: negative discriminant");
      disc = 0.0;
    }
    const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
    double r1, r2;
    if (q == 0.0) {
      r1 = r2 = 0.0;
    } else {
      r1 = q;
      r2 = c0 / q;
    }
    if (r1 < r2) std::swap(r1, r2);
    return {r1, r2};
  }
  if (n > tolerances().max_companion_degree)
    throw InvalidInput("real_roots: degree exceeds companion-matrix limit");

  // Scale roots by s so companion entries stay O(1): q(w) = p(s w) / s^n.
  double s = 0.0;
  for (int k = 0; k < n; ++k) {
    if (c[k] != 0.0) s = std::max(s, std::pow(std::abs(c[k]), 1.0 / (n - k)));
  }
  if (s == 0.0) return std::vector<double>(n, 0.0);  // p(z) = z^n

  std::vector<double> cs(n);
  {
    double t = 1.0;  // s^{n-k}
    for (int k = n - 1; k >= 0; --k) {
      t *= s;
      cs[k] = c[k] / t;
    }
  }

  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -cs[i];

  Eigen::EigenSolver<Eigen::MatrixXd> es(companion, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success) throw NotRealRooted("real_roots: eigensolver failed");

  const double imag_tol = tolerances().imag_truncate;
  std::vector<double> roots;
  roots.reserve(n);
  for (int i = 0; i < n; ++i) {
    const std::complex<double> w = es.eigenvalues()(i);
    if (std::abs(w.imag()) > imag_tol * std::max(1.0, std::abs(w)))
      throw NotRealRooted("real_roots: complex pair beyond tolerance");
    roots.push_back(w.real() * s);
  }
  std::sort(roots.begin(), roots.end(), std::greater<double>());
  return roots;
}

RealRootedPoly derivative(const RealRootedPoly& p, bool normalize_monic) {
  const int n = p.degree();
  if (n < 1) throw InvalidInput("derivative: degree must be >= 1");
  if (n == 1) throw InvalidInput("derivative: result would be constant");
  const auto& c = p.coeffs();
  std::vector<double> d(n);
  for (int k = 1; k <= n; ++k) d[k - 1] = c[k] * k;
  if (normalize_monic) {
    for (double& x : d) x /= n;
  } else {
    // The raw derivative has leading coefficient n; the monic storage
    // contract forces the normalized form, so the caller recovers the raw
    // polynomial as degree() * result. Same roots either way.
    for (double& x : d) x /= n;
  }
  return RealRootedPoly(std::move(d));
}

std::vector<double> power_sums_to_elementary(const std::vector<double>& s) {
  require_finite(s, "power_sums_to_elementary");
  const std::size_t K = s.size();
  std::vector<double> e(K + 1, 0.0);
  e[0] = 1.0;
  for (std::size_t j = 1; j <= K; ++j) {
    double acc = 0.0;
    double sign = 1.0;
    for (std::size_t k = 1; k <= j; ++k) {
      acc += sign * e[j - k] * s[k - 1];
      sign = -sign;
    }
    e[j] = acc / static_cast<double>(j);
  }
  return std::vector<double>(e.begin() + 1, e.end());
}

std::vector<double> elementary_to_power_sums(const std::vector<double>& e_in) {
  require_finite(e_in, "elementary_to_power_sums");
  const std::size_t K = e_in.size();
  std::vector<double> e(K + 1, 0.0);
  e[0] = 1.0;
  for (std::size_t j = 1; j <= K; ++j) e[j] = e_in[j - 1];
  std::vector<double> s(K, 0.0);
  for (std::size_t j = 1; j <= K; ++j) {
    double acc = static_cast<double>(j) * e[j];
    double sign = 1.0;
    for (std::size_t k = 1; k < j; ++k) {
      acc -= sign * e[j - k] * s[k - 1];
      sign = -sign;
    }
    s[j - 1] = acc * ((j % 2 == 1) ? 1.0 : -1.0);
  }
  return s;
}

RealRootedPoly hermite(int n) {
  if (n < 1) throw InvalidParameter("hermite: N must be >= 1");
  std::vector<double> h{0.0, 1.0};  // H_1 = z
  for (int k = 1; k < n; ++k) {
    std::vector<double> next(h.size() + 1, 0.0);
    for (std::size_t j = 0; j < h.size(); ++j) next[j + 1] += h[j];
    for (std::size_t j = 1; j < h.size(); ++j) next[j - 1] -= h[j] * static_cast<double>(j);
    h = std::move(next);
  }
  return RealRootedPoly(std::move(h));
}

std::vector<double> secular_interlaced_roots(const std::vector<double>& b,
                                             const std::vector<double>& w) {
  const std::size_t n1 = b.size();
  if (n1 < 2) throw InvalidInput("secular_interlaced_roots: need at least two poles");
  if (w.size() != n1) throw InvalidInput("secular_interlaced_roots: weight count mismatch");
  for (std::size_t i = 0; i + 1 < n1; ++i) {
    if (!(b[i] > b[i + 1])) throw InvalidInput("secular_interlaced_roots: poles must decrease");
  }
  for (double x : w) {
    if (!(x > 0.0)) throw InvalidInput("secular_interlaced_roots: weights must be positive");
  }

  // f(z) = sum w_j / (z - b_j) falls from +inf to -inf across each gap
  // (b_{i+1}, b_i), so each gap holds exactly one root. Bisection with a
  // bracketed Newton accelerator.
  auto f_and_df = [&](double z, double& f, double& df) {
    f = 0.0;
    df = 0.0;
    for (std::size_t j = 0; j < n1; ++j) {
      const double inv = 1.0 / (z - b[j]);
      f += w[j] * inv;
      df -= w[j] * inv * inv;
    }
  };

  std::vector<double> roots(n1 - 1);
  for (std::size_t i = 0; i + 1 < n1; ++i) {
    double lo = b[i + 1], hi = b[i];
    double z = 0.5 * (lo + hi);
    const double xtol = 1e-15 * (std::abs(lo) + std::abs(hi) + (hi - lo)) +
                        std::numeric_limits<double>::denorm_min();
    for (int iter = 0; iter < 200; ++iter) {
      double f, df;
      f_and_df(z, f, df);
      if (f > 0.0) {
        lo = z;
      } else if (f < 0.0) {
        hi = z;
      } else {
        break;
      }
      const double step = z - f / df;
      z = (step > lo && step < hi) ? step : 0.5 * (lo + hi);
      if (hi - lo <= xtol) {
        z = 0.5 * (lo + hi);
        break;
      }
    }
    roots[i] = z;
  }
  return roots;
}

}  // namespace betachains
