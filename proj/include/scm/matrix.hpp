// Copyright 2026 The SCM Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace scm {

/// Dense real symmetric matrix, row-major. Used for symmetry-block
/// Hamiltonians and spin operators; energies in hartree.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, 0.0) {}

  std::size_t dim() const { return dim_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
  double operator()(std::size_t i, std::size_t j) const {
    return data_[i * dim_ + j];
  }
  std::span<const double> data() const { return data_; }
  std::span<double> data() { return data_; }

  /// max |A - A^T| entry.
  double asymmetry() const;
  /// max |A - B| entry; dimensions must agree.
  double max_abs_diff(const SymMatrix& other) const;

 private:
  std::size_t dim_ = 0;
  std::vector<double> data_;
};

struct GroundState {
  double energy = 0.0;
  std::vector<double> vector;  ///< unit norm, first nonzero component > 0
};

/// Lowest eigenpair of a symmetric matrix (dense solve).
GroundState exact_ground(const SymMatrix& h);

/// Full ascending spectrum.
std::vector<double> eigenvalues(const SymMatrix& h);

/// Eigendecomposition: ascending eigenvalues plus column eigenvectors
/// (vectors[k] is the k-th eigenvector).
struct EigenSystem {
  std::vector<double> values;
  std::vector<std::vector<double>> vectors;
};
EigenSystem eigensystem(const SymMatrix& h);

/// Pad h into a 2^qubits space: top-left block is h, extra diagonal entries
/// hold `padding`, all other new entries zero. Throws ConstraintError when
/// h does not fit.
SymMatrix embed(const SymMatrix& h, unsigned qubits, double padding);

}  // namespace scm
