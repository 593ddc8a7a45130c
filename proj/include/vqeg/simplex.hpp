// Copyright 2026 The VQEG Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Dense>
#include <vector>

#include "vqeg/errors.hpp"

namespace vqeg {

/// Dense primal simplex for  max c'x  s.t.  Ax <= b, x >= 0  with b >= 0,
/// so the slack basis is an initial feasible vertex. Pivots follow Bland's
/// rule (smallest eligible index), which rules out cycling; an iteration
/// cap guards against numerical stalls anyway.
template <typename Scalar>
class SimplexTableau {
 public:
  using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  SimplexTableau(const MatrixX& a, const VectorX& b, const VectorX& c,
                 Scalar tol = Scalar(1e-10))
      : rows_(a.rows()), cols_(a.cols()), tol_(tol) {
    if (b.size() != rows_ || c.size() != cols_) {
      throw std::invalid_argument("simplex: inconsistent dimensions");
    }
    if (b.minCoeff() < Scalar(0)) {
      throw std::invalid_argument("simplex: requires b >= 0");
    }
    // Layout: [ A | I | b ] over the constraints, reduced costs underneath.
    tableau_ = MatrixX::Zero(rows_ + 1, cols_ + rows_ + 1);
    tableau_.topLeftCorner(rows_, cols_) = a;
    tableau_.block(0, cols_, rows_, rows_).setIdentity();
    tableau_.col(cols_ + rows_).head(rows_) = b;
    tableau_.row(rows_).head(cols_) = -c.transpose();
    basis_.resize(rows_);
    for (Eigen::Index i = 0; i < rows_; ++i) basis_[i] = cols_ + i;
  }

  /// Runs to optimality. Throws SolverFailure if the cap is exceeded or the
  /// problem is unbounded.
  void solve(long max_iterations) {
    for (long iter = 0; iter < max_iterations; ++iter) {
      const Eigen::Index entering = pickEntering();
      if (entering < 0) return;  // all reduced costs nonnegative: optimal
      const Eigen::Index leaving = pickLeaving(entering);
      if (leaving < 0) {
        throw SolverFailure("simplex: objective unbounded", iter);
      }
      pivot(leaving, entering);
    }
    throw SolverFailure("simplex: iteration cap exceeded", max_iterations);
  }

  Scalar objective() const { return tableau_(rows_, cols_ + rows_); }

  /// Primal solution x (decision variables only).
  VectorX primal() const {
    VectorX x = VectorX::Zero(cols_);
    for (Eigen::Index i = 0; i < rows_; ++i) {
      if (basis_[i] < cols_) x[basis_[i]] = tableau_(i, cols_ + rows_);
    }
    return x;
  }

  /// Constraint duals, read off the slack columns of the objective row.
  VectorX duals() const {
    return tableau_.row(rows_).segment(cols_, rows_).transpose();
  }

 private:
  Eigen::Index pickEntering() const {
    for (Eigen::Index j = 0; j < cols_ + rows_; ++j) {
      if (tableau_(rows_, j) < -tol_) return j;
    }
    return -1;
  }

  Eigen::Index pickLeaving(Eigen::Index entering) const {
    Eigen::Index best = -1;
    Scalar best_ratio = Scalar(0);
    for (Eigen::Index i = 0; i < rows_; ++i) {
      const Scalar coeff = tableau_(i, entering);
      if (coeff <= tol_) continue;
      const Scalar ratio = tableau_(i, cols_ + rows_) / coeff;
      if (best < 0 || ratio < best_ratio - tol_ ||
          (ratio < best_ratio + tol_ && basis_[i] < basis_[best])) {
        best = i;
        best_ratio = ratio;
      }
    }
    return best;
  }

  void pivot(Eigen::Index row, Eigen::Index col) {
    tableau_.row(row) /= tableau_(row, col);
    for (Eigen::Index i = 0; i <= rows_; ++i) {
      if (i == row) continue;
      const Scalar factor = tableau_(i, col);
      if (factor != Scalar(0)) tableau_.row(i) -= factor * tableau_.row(row);
    }
    basis_[row] = col;
  }

  Eigen::Index rows_, cols_;
  Scalar tol_;
  MatrixX tableau_;
  std::vector<Eigen::Index> basis_;
};

}  // namespace vqeg
