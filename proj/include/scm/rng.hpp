// Copyright 2026 The SCM Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>
#include <span>

namespace scm {

/// splitmix64 step; used to derive independent stream seeds from a base seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Deterministic seed for (base, stream, counter). Streams keep parallel
/// consumers (measurement groups, calibration columns, geometries)
/// independent of scheduling order.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream,
                                 std::uint64_t counter = 0) {
  return splitmix64(splitmix64(base ^ (0x6a09e667f3bcc909ULL + stream)) ^
                    splitmix64(counter ^ 0xbb67ae8584caa73bULL));
}

/// Seeded generator with the few draw kinds the simulators need.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// +1 or -1 with equal probability.
  int rademacher() { return (engine_() & 1u) ? 1 : -1; }

  /// Draw an index from a cumulative distribution (cdf.back() ~ 1).
  std::size_t categorical_from_cdf(std::span<const double> cdf) {
    const double u = uniform01();
    std::size_t lo = 0, hi = cdf.size() - 1;
    while (lo < hi) {
      const std::size_t mid = (lo + hi) / 2;
      if (cdf[mid] <= u) {
        lo = mid + 1;
      } else {
        hi = mid;
      }
    }
    return lo;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace scm
