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

#include "vqeg/errors.hpp"

namespace vqeg {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Payoff matrix A of a finite two-player zero-sum game. The row player
/// receives A_ij; the column player receives -A_ij.
class PayoffMatrix {
 public:
  /// Requires at least one row and column and all entries finite.
  explicit PayoffMatrix(Matrix entries);

  const Matrix& entries() const { return entries_; }
  Eigen::Index rows() const { return entries_.rows(); }
  Eigen::Index cols() const { return entries_.cols(); }

  /// Max-norm of the entries, max_ij |A_ij|.
  double maxAbs() const { return entries_.cwiseAbs().maxCoeff(); }

 private:
  Matrix entries_;
};

/// A point on a probability simplex. Construction clamps sub-tolerance
/// negative components to zero and renormalizes to unit sum.
class MixedStrategy {
 public:
  explicit MixedStrategy(Vector probs);

  static MixedStrategy pure(Eigen::Index size, Eigen::Index action);
  static MixedStrategy uniform(Eigen::Index size);

  const Vector& probs() const { return probs_; }
  Eigen::Index size() const { return probs_.size(); }
  double operator[](Eigen::Index i) const { return probs_[i]; }

 private:
  Vector probs_;
};

/// Maximal unilateral payoff improvements for the two players at a profile.
struct DeviationGains {
  double row;
  double col;
};

/// Power-of-two embedding of a payoff matrix. Dummy rows pay -c and dummy
/// columns +c to the row player with c > max|A_ij|, so every dummy action
/// is strictly dominated and carries no mass at any equilibrium.
struct EmbeddedGame {
  Matrix tilde_a;       // M x N embedded payoff matrix
  Eigen::Index m, n;    // original dims
  Eigen::Index M, N;    // padded dims (powers of two)
  double c;             // dominance constant
};

/// Result of dropping the dummy tail of a padded strategy.
struct RestrictedStrategy {
  MixedStrategy strategy;
  double leakage;  // probability mass the padded strategy put on dummies
};

/// Expected payoff x' A y to the row player.
double payoff(const PayoffMatrix& a, const MixedStrategy& x,
              const MixedStrategy& y);

/// Best-response improvements available to each player at (x, y).
DeviationGains deviationGains(const PayoffMatrix& a, const MixedStrategy& x,
                              const MixedStrategy& y);

/// Duality gap max_i (Ay)_i - min_j (x'A)_j. Zero exactly at a Nash
/// equilibrium; equals the sum of the two deviation gains.
double nashGap(const PayoffMatrix& a, const MixedStrategy& x,
               const MixedStrategy& y);

/// Embeds A into the next power-of-two dimensions with dominance constant
/// c = max|A_ij| + c_margin. Already power-of-two games embed as themselves.
EmbeddedGame embedDominated(const PayoffMatrix& a, double c_margin = 1.0);

/// Drops entries past `original`, renormalizing by the retained mass.
/// Throws DegenerateStrategyError when all mass sits on dummy actions.
RestrictedStrategy restrictStrategy(const MixedStrategy& padded,
                                    Eigen::Index original);

/// Appends zeros up to `padded` entries.
MixedStrategy extendStrategy(const MixedStrategy& s, Eigen::Index padded);

/// Smallest power of two >= x (x >= 1).
Eigen::Index nextPowerOfTwo(Eigen::Index x);

}  // namespace vqeg
