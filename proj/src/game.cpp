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

#include "vqeg/game.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vqeg {

namespace {

constexpr double kComponentTol = 1e-9;

void checkProfileDims(const PayoffMatrix& a, const MixedStrategy& x,
                      const MixedStrategy& y) {
  if (x.size() != a.rows() || y.size() != a.cols()) {
    throw std::invalid_argument("strategy dimensions do not match the game");
  }
}

}  // namespace

PayoffMatrix::PayoffMatrix(Matrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() < 1 || entries_.cols() < 1) {
    throw std::invalid_argument("payoff matrix needs at least one action per player");
  }
  if (!entries_.allFinite()) {
    throw std::invalid_argument("payoff matrix entries must be finite");
  }
}

MixedStrategy::MixedStrategy(Vector probs) : probs_(std::move(probs)) {
  if (probs_.size() < 1) {
    throw std::invalid_argument("strategy needs at least one action");
  }
  if (!probs_.allFinite()) {
    throw std::invalid_argument("strategy components must be finite");
  }
  if (probs_.minCoeff() < -kComponentTol) {
    throw std::invalid_argument("strategy components must be nonnegative");
  }
  probs_ = probs_.cwiseMax(0.0);
  const double sum = probs_.sum();
  if (sum <= kComponentTol) {
    throw DegenerateStrategyError("strategy has no probability mass");
  }
  probs_ /= sum;
}

MixedStrategy MixedStrategy::pure(Eigen::Index size, Eigen::Index action) {
  if (action < 0 || action >= size) {
    throw std::invalid_argument("pure action index out of range");
  }
  Vector p = Vector::Zero(size);
  p[action] = 1.0;
  return MixedStrategy(std::move(p));
}

MixedStrategy MixedStrategy::uniform(Eigen::Index size) {
  return MixedStrategy(Vector::Constant(size, 1.0 / static_cast<double>(size)));
}

double payoff(const PayoffMatrix& a, const MixedStrategy& x,
              const MixedStrategy& y) {
  checkProfileDims(a, x, y);
  return x.probs().dot(a.entries() * y.probs());
}

DeviationGains deviationGains(const PayoffMatrix& a, const MixedStrategy& x,
                              const MixedStrategy& y) {
  checkProfileDims(a, x, y);
  const Vector ay = a.entries() * y.probs();
  const Vector xa = a.entries().transpose() * x.probs();
  const double value = x.probs().dot(ay);
  return DeviationGains{std::max(0.0, ay.maxCoeff() - value),
                        std::max(0.0, value - xa.minCoeff())};
}

double nashGap(const PayoffMatrix& a, const MixedStrategy& x,
               const MixedStrategy& y) {
  checkProfileDims(a, x, y);
  const Vector ay = a.entries() * y.probs();
  const Vector xa = a.entries().transpose() * x.probs();
  return std::max(0.0, ay.maxCoeff() - xa.minCoeff());
}

Eigen::Index nextPowerOfTwo(Eigen::Index x) {
  Eigen::Index p = 1;
  while (p < x) p <<= 1;
  return p;
}

EmbeddedGame embedDominated(const PayoffMatrix& a, double c_margin) {
  if (!(c_margin > 0.0)) {
    throw std::invalid_argument("c_margin must be positive");
  }
  const Eigen::Index m = a.rows();
  const Eigen::Index n = a.cols();
  const Eigen::Index big_m = nextPowerOfTwo(m);
  const Eigen::Index big_n = nextPowerOfTwo(n);
  const double c = a.maxAbs() + c_margin;

  Matrix tilde = Matrix::Zero(big_m, big_n);
  tilde.topLeftCorner(m, n) = a.entries();
  tilde.bottomLeftCorner(big_m - m, n).setConstant(-c);
  tilde.topRightCorner(m, big_n - n).setConstant(c);
  return EmbeddedGame{std::move(tilde), m, n, big_m, big_n, c};
}

RestrictedStrategy restrictStrategy(const MixedStrategy& padded,
                                    Eigen::Index original) {
  if (original < 1 || original > padded.size()) {
    throw std::invalid_argument("restriction size out of range");
  }
  const double leakage = padded.probs().tail(padded.size() - original).sum();
  if (1.0 - leakage <= 1e-9) {
    throw DegenerateStrategyError("all probability mass on dummy actions");
  }
  return RestrictedStrategy{MixedStrategy(padded.probs().head(original)),
                            leakage};
}

MixedStrategy extendStrategy(const MixedStrategy& s, Eigen::Index padded) {
  if (padded < s.size()) {
    throw std::invalid_argument("extension must not shrink the strategy");
  }
  Vector p = Vector::Zero(padded);
  p.head(s.size()) = s.probs();
  return MixedStrategy(std::move(p));
}

}  // namespace vqeg
