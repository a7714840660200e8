// Copyright 2026 The SCM Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <vector>

#include "scm/pointgroup.hpp"

namespace scm {

/// Slater determinant as paired alpha/beta occupation bitmasks over spatial
/// orbitals (bit p = orbital p occupied for that spin). Spin-orbitals are
/// ordered all-alpha ascending, then all-beta ascending; fermionic signs
/// count occupied spin-orbitals below the acted-upon index.
struct Determinant {
  std::uint64_t alpha = 0;
  std::uint64_t beta = 0;

  auto operator<=>(const Determinant&) const = default;

  int n_alpha() const { return std::popcount(alpha); }
  int n_beta() const { return std::popcount(beta); }
  int n_electrons() const { return n_alpha() + n_beta(); }
};

/// Active orbital space: spatial orbital count, per-orbital irreps, and the
/// constant energy offset carried over from any frozen core.
struct SpinOrbitalBasis {
  std::size_t norb = 0;
  std::vector<Irrep> irreps;
  double core_energy = 0.0;
};

struct QuantumNumbers {
  int n = 0;       ///< particle count
  int twice_sz = 0; ///< 2*Sz, integral for both parities
  Irrep gamma;
};

/// (N, Sz, Gamma) of a determinant: N from total popcount, Sz from the
/// alpha/beta imbalance, Gamma as the XOR product over occupied orbitals.
inline QuantumNumbers determinant_quantum_numbers(const Determinant& det,
                                                  const SpinOrbitalBasis& basis) {
  QuantumNumbers qn;
  qn.n = det.n_electrons();
  qn.twice_sz = det.n_alpha() - det.n_beta();
  std::uint8_t code = 0;
  for (std::size_t p = 0; p < basis.norb; ++p) {
    if ((det.alpha >> p) & 1) code ^= basis.irreps[p].code;
    if ((det.beta >> p) & 1) code ^= basis.irreps[p].code;
  }
  qn.gamma = {code, basis.irreps.empty() ? nullptr : basis.irreps.front().table};
  return qn;
}

}  // namespace scm
