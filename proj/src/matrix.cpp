// Copyright 2026 The SCM Authors.
// SPDX-License-Identifier: Apache-2.0

#include "scm/matrix.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <cstdlib>

#include "scm/errors.hpp"

namespace scm {

namespace {

using MatMap = Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic,
                                              Eigen::Dynamic, Eigen::RowMajor>>;

Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solve(const SymMatrix& h,
                                                     bool vectors) {
  if (h.dim() == 0) {
    throw ConstraintError("eigensolve on empty matrix");
  }
  MatMap m(h.data().data(), static_cast<Eigen::Index>(h.dim()),
           static_cast<Eigen::Index>(h.dim()));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.compute(m, vectors ? Eigen::ComputeEigenvectors
                            : Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericError("symmetric eigensolver failed to converge");
  }
  return solver;
}

}  // namespace

double SymMatrix::asymmetry() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i + 1; j < dim_; ++j) {
      worst = std::max(worst, std::abs((*this)(i, j) - (*this)(j, i)));
    }
  }
  return worst;
}

double SymMatrix::max_abs_diff(const SymMatrix& other) const {
  if (other.dim() != dim_) {
    throw ConstraintError("matrix dimension mismatch in max_abs_diff");
  }
  double worst = 0.0;
  for (std::size_t k = 0; k < data_.size(); ++k) {
    worst = std::max(worst, std::abs(data_[k] - other.data_[k]));
  }
  return worst;
}

GroundState exact_ground(const SymMatrix& h) {
  const auto solver = solve(h, true);
  GroundState gs;
  gs.energy = solver.eigenvalues()(0);
  const auto col = solver.eigenvectors().col(0);
  gs.vector.assign(col.data(), col.data() + h.dim());
  // sign convention: first component of nonnegligible magnitude positive
  for (double v : gs.vector) {
    if (std::abs(v) > 1e-12) {
      if (v < 0) {
        for (double& x : gs.vector) x = -x;
      }
      break;
    }
  }
  return gs;
}

std::vector<double> eigenvalues(const SymMatrix& h) {
  const auto solver = solve(h, false);
  return {solver.eigenvalues().data(), solver.eigenvalues().data() + h.dim()};
}

EigenSystem eigensystem(const SymMatrix& h) {
  const auto solver = solve(h, true);
  EigenSystem out;
  out.values.assign(solver.eigenvalues().data(),
                    solver.eigenvalues().data() + h.dim());
  out.vectors.resize(h.dim());
  for (std::size_t k = 0; k < h.dim(); ++k) {
    const auto col = solver.eigenvectors().col(static_cast<Eigen::Index>(k));
    out.vectors[k].assign(col.data(), col.data() + h.dim());
  }
  return out;
}

SymMatrix embed(const SymMatrix& h, unsigned qubits, double padding) {
  const std::size_t full = std::size_t{1} << qubits;
  if (h.dim() > full) {
    throw ConstraintError("cannot embed a " + std::to_string(h.dim()) +
                          "-dimensional block into " + std::to_string(full) +
                          " basis states");
  }
  if (h.dim() == full) {
    return h;
  }
  SymMatrix out(full);
  for (std::size_t i = 0; i < h.dim(); ++i) {
    for (std::size_t j = 0; j < h.dim(); ++j) {
      out(i, j) = h(i, j);
    }
  }
  for (std::size_t i = h.dim(); i < full; ++i) {
    out(i, i) = padding;
  }
  return out;
}

}  // namespace scm
