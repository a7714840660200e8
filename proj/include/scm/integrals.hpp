// Copyright 2026 The SCM Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <vector>

#include "scm/determinant.hpp"
#include "scm/pointgroup.hpp"

namespace scm {

/// Electron integrals for an active space, FCIDUMP conventions: chemists'
/// notation (pq|rs) with 8-fold permutation symmetry, plus a scalar constant
/// (nuclear repulsion and any frozen-core contribution).
class IntegralSet {
 public:
  IntegralSet(std::size_t norb, int nelec, int ms2, std::vector<Irrep> irreps,
              const PointGroupTable& table);

  std::size_t norb() const { return norb_; }
  int nelec() const { return nelec_; }
  int ms2() const { return ms2_; }
  double core() const { return core_; }
  const std::vector<Irrep>& orbital_irreps() const { return irreps_; }
  const PointGroupTable& table() const { return *table_; }

  double h(std::size_t p, std::size_t q) const { return h_[p * norb_ + q]; }
  double g(std::size_t p, std::size_t q, std::size_t r, std::size_t s) const {
    return g_[((p * norb_ + q) * norb_ + r) * norb_ + s];
  }

  void set_core(double value) { core_ = value; }
  /// Stores h(p,q) = h(q,p).
  void set_h(std::size_t p, std::size_t q, double value);
  /// Stores all 8 permutation images of (pq|rs).
  void set_g(std::size_t p, std::size_t q, std::size_t r, std::size_t s,
             double value);

  SpinOrbitalBasis basis() const { return {norb_, irreps_, core_}; }

 private:
  std::size_t norb_;
  int nelec_;
  int ms2_;
  double core_ = 0.0;
  std::vector<Irrep> irreps_;
  const PointGroupTable* table_;
  std::vector<double> h_;
  std::vector<double> g_;
};

/// Parse an FCIDUMP stream: `&FCI NORB=..,NELEC=..,MS2=..,ORBSYM=..,.. &END`
/// header (possibly spanning lines) followed by `value i j k l` records.
/// 1-based indices; `i j 0 0` one-electron, `0 0 0 0` scalar constant.
/// Unlisted integrals are zero. Errors carry the offending line number.
IntegralSet parse_fcidump(std::istream& in,
                          const PointGroupTable& table = PointGroupTable::d2h());

IntegralSet load_fcidump(const std::filesystem::path& path,
                         const PointGroupTable& table = PointGroupTable::d2h());

}  // namespace scm
