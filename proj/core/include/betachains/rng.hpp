// Copyright 2026 the beta-chains authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "betachains/errors.hpp"

namespace betachains {

// Splittable generator built on the splitmix64 finalizer (Steele, Lea,
// Flood 2014). A stream is fully determined by (seed, stream_id), so a
// parallel schedule that assigns one stream per work chunk produces the
// same numbers no matter how many threads run it.
class RngStream {
 public:
  RngStream() : state_(0x853c49e6748fea9bULL) {}
  explicit RngStream(std::uint64_t seed, std::uint64_t stream_id = 0) {
    // Two finalizer rounds decorrelate (seed, stream) lattices.
    state_ = mix(mix(seed) ^ mix(0x9E3779B97F4A7C15ULL * (stream_id + 1) +
                                 0x632BE59BD9B4E019ULL));
    has_cached_normal_ = false;
  }

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return (next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform in (0, 1), never exactly 0.
  double uniform_pos() {
    double u;
    do {
      u = uniform();
    } while (u <= 0.0);
    return u;
  }

  /// Standard normal via the Marsaglia polar method (one value cached).
  double normal() {
    if (has_cached_normal_) {
      has_cached_normal_ = false;
      return cached_normal_;
    }
    double u, v, s;
    do {
      u = 2.0 * uniform() - 1.0;
      v = 2.0 * uniform() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    cached_normal_ = v * f;
    has_cached_normal_ = true;
    return u * f;
  }

  double exponential(double rate = 1.0) { return -std::log(uniform_pos()) / rate; }

  double cauchy() {
    // tan of a uniform angle; avoids the poles.
    double u;
    do {
      u = uniform();
    } while (u == 0.5);
    return std::tan(M_PI * (u - 0.5));
  }

  /// Gamma(shape, 1) via Marsaglia-Tsang, boosted for shape < 1.
  double gamma(double shape) {
    if (!(shape > 0.0)) throw InvalidParameter("gamma: shape must be > 0");
    if (shape < 1.0) {
      const double u = uniform_pos();
      return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x, v;
      do {
        x = normal();
        v = 1.0 + c * x;
      } while (v <= 0.0);
      v = v * v * v;
      const double u = uniform_pos();
      if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
      if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
  }

  double gamma(double shape, double rate) { return gamma(shape) / rate; }

  double chi(double dof) { return std::sqrt(2.0 * gamma(0.5 * dof)); }

  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) {
    // Lemire-style rejection to kill modulo bias.
    if (n == 0) throw InvalidParameter("below: n must be > 0");
    const std::uint64_t threshold = (-n) % n;
    for (;;) {
      const std::uint64_t r = next_u64();
      if (r >= threshold) return r % n;
    }
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[below(i)]);
    }
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

}  // namespace betachains
