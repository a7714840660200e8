// Copyright 2026 The SCM Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>

#include "scm/determinant.hpp"
#include "scm/integrals.hpp"
#include "scm/matrix.hpp"

namespace scm {

/// <bra|H|ket> by the Slater-Condon rules, including the scalar constant on
/// the diagonal and the fermionic sign of the occupation ordering. Zero when
/// the determinants differ in more than two spin-orbitals.
double slater_condon_element(const Determinant& bra, const Determinant& ket,
                             const IntegralSet& ints);

/// Dense block Hamiltonian over an ordered determinant list. Parallel over
/// upper-triangle entries; bitwise identical to build_matrix_serial.
SymMatrix build_matrix(std::span<const Determinant> dets,
                       const IntegralSet& ints);
/// Reference implementation, plain loops.
SymMatrix build_matrix_serial(std::span<const Determinant> dets,
                              const IntegralSet& ints);

/// <bra|S^2|ket> matrix over determinants sharing (N, Sz), from
/// S^2 = S-S+ + Sz(Sz+1) applied through occupation algebra.
SymMatrix build_s2_matrix(std::span<const Determinant> dets, std::size_t norb);

}  // namespace scm
