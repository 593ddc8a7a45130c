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

#include <cstdint>
#include <numbers>
#include <utility>
#include <vector>

#include "vqeg/instances.hpp"
#include "vqeg/oracle.hpp"

namespace vqeg {

/// A profile passes when its certified Nash gap is at most this.
inline constexpr double kPassEpsilon = 5e-3;

/// Configuration of one projected extragradient run.
struct EGConfig {
  long steps = 2000;                      // T
  double eta = 0.1;                       // constant stepsize
  EvalMode mode = EvalMode::exact();      // oracle mode
  double box_halfwidth = 2 * std::numbers::pi;
  std::uint64_t seed = 0;
  int layers_row = 0;                     // 0 picks defaultLayerCount
  int layers_col = 0;
  long record_every = 10;
  double c_margin = 1.0;                  // embedding dominance margin
};

/// Default ansatz depth: 3 layers up to 8 outcomes, 4 beyond.
int defaultLayerCount(Eigen::Index padded_dim);

/// One recorded iteration. `residual` is always computed with the exact
/// oracle; `evals` counts shifted payoff evaluations of the updates (4d per
/// iteration) plus the 2 strategy evaluations of each recorded step.
struct TraceRecord {
  long t;
  double value;      // embedded payoff <x~, A~ y~> at the iterate
  double gap;        // Nash gap of the restricted profile in the original game
  double avg_gap;    // gap of the running probability-space average
  double residual;   // exact-oracle projected residual at the iterate
  double leak_row;
  double leak_col;
  long evals;
};

using RunTrace = std::vector<TraceRecord>;

/// Final outcome of a run: last-iterate and tail-averaged strategies, both
/// restricted to the original game, with their certified gaps.
struct RunResult {
  JointParams final_params;
  MixedStrategy x_last;
  MixedStrategy y_last;
  MixedStrategy x_avg;
  MixedStrategy y_avg;
  double final_gap_last;
  double final_gap_avg;
  bool passed;       // min(final_gap_last, final_gap_avg) <= kPassEpsilon
  EGConfig config;   // with layer counts resolved
};

/// Euclidean projection onto the box [-halfwidth, halfwidth]^d:
/// coordinate-wise clamping.
Vector projectBox(const Vector& w, double halfwidth);

/// One extragradient step with operator draws supplied by `op`:
/// predictor w_half = P(w - eta op(w)), corrector w_next = P(w - eta
/// op(w_half)). Returns (w_next, w_half).
template <typename Op>
std::pair<Vector, Vector> egStep(const Vector& w, Op&& op, double eta,
                                 double halfwidth) {
  const Vector w_half = projectBox(w - eta * op(w), halfwidth);
  Vector w_next = projectBox(w - eta * op(w_half), halfwidth);
  return {std::move(w_next), w_half};
}

/// Projected residual ||(w - P(w - eta g(w))) / eta||_2; zero exactly at
/// first-order stationary points of the box-constrained problem.
template <typename Op>
double genericProjectedResidual(const Vector& w, Op&& g, double eta,
                                double halfwidth) {
  const Vector moved = projectBox(w - eta * g(w), halfwidth);
  return (w - moved).norm() / eta;
}

/// Residual with the exact saddle operator of a circuit game.
double projectedResidual(const CircuitGame& cg, const JointParams& w,
                         double eta, double halfwidth);

/// Runs Algorithm "construct, initialize, iterate, certify": embeds the
/// game, initializes omega uniformly in [-0.1, 0.1]^d from the seed, takes
/// `steps` extragradient steps, and records certificates every
/// `record_every` iterations (plus the final one). The tail average pools
/// the last 20% of recorded strategies in probability space.
std::pair<RunResult, RunTrace> runVqeg(const PayoffMatrix& a,
                                       const EGConfig& cfg);

std::pair<RunResult, RunTrace> runVqeg(const GameInstance& instance,
                                       const EGConfig& cfg);

}  // namespace vqeg
