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

#include "vqeg/exact.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "vqeg/simplex.hpp"

namespace vqeg {

namespace {

constexpr double kFeasTol = 1e-10;
constexpr double kEqTol = 1e-9;

// All index subsets of {0..n-1} with the given size, in lexicographic order.
std::vector<std::vector<Eigen::Index>> subsetsOfSize(Eigen::Index n,
                                                     Eigen::Index k) {
  std::vector<std::vector<Eigen::Index>> out;
  std::vector<Eigen::Index> current;
  auto recurse = [&](auto&& self, Eigen::Index start) -> void {
    if (static_cast<Eigen::Index>(current.size()) == k) {
      out.push_back(current);
      return;
    }
    for (Eigen::Index i = start; i < n; ++i) {
      current.push_back(i);
      self(self, i + 1);
      current.pop_back();
    }
  };
  recurse(recurse, 0);
  return out;
}

}  // namespace

ExactSolution solveLp(const PayoffMatrix& a) {
  const Eigen::Index m = a.rows();
  const Eigen::Index n = a.cols();

  // Shift so every entry is >= 1; the shifted value is then positive and
  // the standard reciprocal transform applies.
  const double shift = a.maxAbs() + 1.0;
  const Matrix shifted = a.entries().array() + shift;

  // Column player's LP: max 1'w  s.t.  A_shifted w <= 1, w >= 0.
  // At the optimum 1'w = 1/v_shifted; the duals solve the row player's LP.
  SimplexTableau<double> tableau(shifted, Vector::Ones(m), Vector::Ones(n));
  tableau.solve(1000 + 50 * static_cast<long>(m + n));

  const double inv_value = tableau.objective();
  if (!(inv_value > 0.0) || !std::isfinite(inv_value)) {
    throw SolverFailure("lp: degenerate objective", 0);
  }
  const double shifted_value = 1.0 / inv_value;

  MixedStrategy y(Vector(tableau.primal() * shifted_value));
  MixedStrategy x(Vector(tableau.duals() * shifted_value));
  return ExactSolution{std::move(x), std::move(y), shifted_value - shift};
}

ExactSolution solveSupportEnum(const PayoffMatrix& a) {
  const Eigen::Index m = a.rows();
  const Eigen::Index n = a.cols();
  if (m > 5 || n > 5) {
    throw std::invalid_argument(
        "support enumeration limited to games up to 5x5");
  }
  const Matrix& entries = a.entries();

  long tried = 0;
  // Equal support sizes suffice: every finite zero-sum game has a basic
  // optimal pair drawn from a square submatrix.
  for (Eigen::Index k = 1; k <= std::min(m, n); ++k) {
    for (const auto& rows : subsetsOfSize(m, k)) {
      for (const auto& cols : subsetsOfSize(n, k)) {
        ++tried;
        // Column strategy on `cols` equalizing the rows in `rows`:
        //   sum_j A(r_i, c_j) y_j - v = 0,  sum_j y_j = 1.
        Matrix sys_y = Matrix::Zero(k + 1, k + 1);
        Vector rhs = Vector::Zero(k + 1);
        for (Eigen::Index i = 0; i < k; ++i) {
          for (Eigen::Index j = 0; j < k; ++j) {
            sys_y(i, j) = entries(rows[i], cols[j]);
          }
          sys_y(i, k) = -1.0;
        }
        sys_y.row(k).head(k).setOnes();
        rhs[k] = 1.0;

        Eigen::FullPivLU<Matrix> lu_y(sys_y);
        if (!lu_y.isInvertible()) continue;
        const Vector sol_y = lu_y.solve(rhs);

        // Row strategy on `rows` equalizing the columns in `cols`.
        Matrix sys_x = Matrix::Zero(k + 1, k + 1);
        for (Eigen::Index j = 0; j < k; ++j) {
          for (Eigen::Index i = 0; i < k; ++i) {
            sys_x(j, i) = entries(rows[i], cols[j]);
          }
          sys_x(j, k) = -1.0;
        }
        sys_x.row(k).head(k).setOnes();

        Eigen::FullPivLU<Matrix> lu_x(sys_x);
        if (!lu_x.isInvertible()) continue;
        const Vector sol_x = lu_x.solve(rhs);

        const double v_col = sol_y[k];
        const double v_row = sol_x[k];
        if (std::abs(v_col - v_row) > kEqTol) continue;
        if (sol_y.head(k).minCoeff() < -kFeasTol) continue;
        if (sol_x.head(k).minCoeff() < -kFeasTol) continue;

        Vector y_full = Vector::Zero(n);
        for (Eigen::Index j = 0; j < k; ++j) y_full[cols[j]] = sol_y[j];
        Vector x_full = Vector::Zero(m);
        for (Eigen::Index i = 0; i < k; ++i) x_full[rows[i]] = sol_x[i];

        // Equilibrium conditions off the supports.
        if (((entries * y_full).array() > v_col + kEqTol).any()) continue;
        if (((entries.transpose() * x_full).array() < v_row - kEqTol).any()) {
          continue;
        }

        ExactSolution candidate{MixedStrategy(std::move(x_full)),
                                MixedStrategy(std::move(y_full)), v_col};
        if (nashGap(a, candidate.x, candidate.y) <= kEqTol) {
          return candidate;
        }
      }
    }
  }
  throw SolverFailure("support enumeration found no equilibrium", tried);
}

}  // namespace vqeg
