// Copyright 2026 The SCM Authors.
// SPDX-License-Identifier: Apache-2.0

#include "scm/slater_condon.hpp"

#include <bit>
#include <cstdint>

#include "scm/errors.hpp"

namespace scm {

namespace {

using u64 = std::uint64_t;

// parity of occupied orbitals below position i
inline int sign_below(u64 mask, int i) {
  return (std::popcount(mask & ((u64{1} << i) - 1)) & 1) ? -1 : 1;
}

inline int lowest_bit(u64 mask) { return std::countr_zero(mask); }

double diagonal_element(const Determinant& det, const IntegralSet& ints) {
  double value = ints.core();
  const std::size_t n = ints.norb();
  for (std::size_t p = 0; p < n; ++p) {
    const int occ_p = static_cast<int>((det.alpha >> p) & 1) +
                      static_cast<int>((det.beta >> p) & 1);
    if (occ_p == 0) continue;
    value += occ_p * ints.h(p, p);
    for (std::size_t q = 0; q < n; ++q) {
      const int na_q = static_cast<int>((det.alpha >> q) & 1);
      const int nb_q = static_cast<int>((det.beta >> q) & 1);
      const int occ_q = na_q + nb_q;
      if (occ_q == 0) continue;
      value += 0.5 * occ_p * occ_q * ints.g(p, p, q, q);
      const int same_spin = static_cast<int>((det.alpha >> p) & 1) * na_q +
                            static_cast<int>((det.beta >> p) & 1) * nb_q;
      value -= 0.5 * same_spin * ints.g(p, q, q, p);
    }
  }
  return value;
}

// single excitation i -> a within the spin-sigma mask
double single_element(const Determinant& bra, const Determinant& ket, u64 m1,
                      u64 m2, u64 same_spin_occ, u64 other_spin_occ,
                      const IntegralSet& ints) {
  const int i = lowest_bit(m1 & ~m2);
  const int a = lowest_bit(m2 & ~m1);
  const int sgn = sign_below(m1, i) * sign_below(m2, a);
  double value = ints.h(i, a);
  for (u64 rest = same_spin_occ; rest; rest &= rest - 1) {
    const int j = lowest_bit(rest);
    if (j == i) continue;
    value += ints.g(i, a, j, j) - ints.g(i, j, j, a);
  }
  for (u64 rest = other_spin_occ; rest; rest &= rest - 1) {
    const int j = lowest_bit(rest);
    value += ints.g(i, a, j, j);
  }
  (void)bra;
  (void)ket;
  return sgn * value;
}

}  // namespace

double slater_condon_element(const Determinant& bra, const Determinant& ket,
                             const IntegralSet& ints) {
  const u64 da = bra.alpha ^ ket.alpha;
  const u64 db = bra.beta ^ ket.beta;
  const int nex = std::popcount(da) + std::popcount(db);
  if (nex > 4) return 0.0;

  if (nex == 0) {
    return diagonal_element(bra, ints);
  }

  if (nex == 2) {
    if (da) {
      return single_element(bra, ket, bra.alpha, ket.alpha, bra.alpha,
                            bra.beta, ints);
    }
    return single_element(bra, ket, bra.beta, ket.beta, bra.beta, bra.alpha,
                          ints);
  }

  // double excitations
  if (da && db) {  // one alpha, one beta
    const int i = lowest_bit(bra.alpha & ~ket.alpha);
    const int a = lowest_bit(ket.alpha & ~bra.alpha);
    const int j = lowest_bit(bra.beta & ~ket.beta);
    const int b = lowest_bit(ket.beta & ~bra.beta);
    const int sgn = sign_below(bra.alpha, i) * sign_below(ket.alpha, a) *
                    sign_below(bra.beta, j) * sign_below(ket.beta, b);
    return sgn * ints.g(i, a, j, b);
  }

  // same spin
  const u64 m1 = da ? bra.alpha : bra.beta;
  const u64 m2 = da ? ket.alpha : ket.beta;
  const u64 rem = m1 & ~m2;
  const u64 add = m2 & ~m1;
  const int i = lowest_bit(rem);
  const int j = lowest_bit(rem & (rem - 1));
  const int a = lowest_bit(add);
  const int b = lowest_bit(add & (add - 1));
  const int sgn = sign_below(m1, i) * sign_below(m1 & ~(u64{1} << i), j) *
                  sign_below(m2, a) * sign_below(m2 & ~(u64{1} << a), b);
  return sgn * (ints.g(i, a, j, b) - ints.g(i, b, j, a));
}

SymMatrix build_matrix_serial(std::span<const Determinant> dets,
                              const IntegralSet& ints) {
  if (dets.empty()) {
    throw ConstraintError("cannot build a Hamiltonian over zero determinants");
  }
  const std::size_t dim = dets.size();
  SymMatrix h(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i; j < dim; ++j) {
      const double v = slater_condon_element(dets[i], dets[j], ints);
      h(i, j) = v;
      h(j, i) = v;
    }
  }
  return h;
}

SymMatrix build_matrix(std::span<const Determinant> dets,
                       const IntegralSet& ints) {
  if (dets.empty()) {
    throw ConstraintError("cannot build a Hamiltonian over zero determinants");
  }
  const std::size_t dim = dets.size();
  SymMatrix h(dim);
#pragma omp parallel for schedule(dynamic, 8)
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i; j < dim; ++j) {
      const double v = slater_condon_element(dets[i], dets[j], ints);
      h(i, j) = v;
      h(j, i) = v;
    }
  }
  return h;
}

SymMatrix build_s2_matrix(std::span<const Determinant> dets, std::size_t norb) {
  const std::size_t dim = dets.size();
  SymMatrix s2(dim);
  for (std::size_t col = 0; col < dim; ++col) {
    const Determinant& ket = dets[col];
    const int na = ket.n_alpha();
    const int nb = ket.n_beta();
    const double sz = 0.5 * (na - nb);

    // S-S+ |ket>: move p beta->alpha then q alpha->beta, tracking signs in
    // the alpha-then-beta spin-orbital ordering.
    for (std::size_t p = 0; p < norb; ++p) {
      if (!((ket.beta >> p) & 1) || ((ket.alpha >> p) & 1)) continue;
      // amplitude for a+_{p,alpha} a_{p,beta}; beta signs include the full
      // alpha count, identical in bra and ket paths for the alpha part
      Determinant mid = ket;
      mid.beta &= ~(u64{1} << p);
      int sgn1 = sign_below(ket.beta, static_cast<int>(p));
      sgn1 *= sign_below(ket.alpha, static_cast<int>(p));
      // alpha electron count changed by +1: affects subsequent beta parities
      mid.alpha |= u64{1} << p;
      for (std::size_t q = 0; q < norb; ++q) {
        if (!((mid.alpha >> q) & 1) || ((mid.beta >> q) & 1)) continue;
        Determinant out = mid;
        out.alpha &= ~(u64{1} << q);
        int sgn2 = sign_below(mid.alpha, static_cast<int>(q));
        sgn2 *= sign_below(mid.beta, static_cast<int>(q));
        out.beta |= u64{1} << q;
        const double amp = sgn1 * sgn2;
        // accumulate <row|S-S+|ket>
        for (std::size_t row = 0; row < dim; ++row) {
          if (dets[row] == out) {
            s2(row, col) += amp;
            break;
          }
        }
      }
    }
    // diagonal part: Sz(Sz + 1)
    s2(col, col) += sz * (sz + 1.0);
  }
  return s2;
}

}  // namespace scm
