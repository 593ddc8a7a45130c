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

#include "vqeg/oracle.hpp"

#include <cmath>
#include <numbers>

namespace vqeg {

namespace {

constexpr double kShift = std::numbers::pi / 2;

// Substream key tags; rows and columns must never share a stream.
constexpr std::uint64_t kRowTag = 0;
constexpr std::uint64_t kColTag = 1;
constexpr std::uint64_t kSelfKey = 0;
constexpr std::uint64_t kOppKey = 1;

void checkParams(const CircuitGame& cg, const JointParams& w) {
  if (w.theta.size() != cg.rowParamCount() ||
      w.phi.size() != cg.colParamCount()) {
    throw std::invalid_argument("parameter vector sizes do not match ansatz");
  }
}

Vector bornProbs(const AnsatzSpec& spec, const Vector& params) {
  return prepareAnsatz<double>(spec, params).amps().cwiseAbs2();
}

// One shifted payoff evaluation for the player whose circuit is `self`.
// `exact_weights` is the opponent-induced observable diagonal (A~ y for the
// row player, A~' x for the column player). Under OpponentMode::Sampled the
// opponent's prepared state is remeasured with fresh shots per evaluation.
struct ShiftedEval {
  const CircuitGame& cg;
  const AnsatzSpec& self;
  const StateVector& opp_state;
  bool self_is_row;
  const Vector& exact_weights;

  double operator()(const Vector& self_params, const EvalMode& mode,
                    std::uint64_t eval_seed) const {
    if (mode.isExact()) {
      return bornProbs(self, self_params).dot(exact_weights);
    }
    Rng self_rng(deriveSeed(eval_seed, kSelfKey));
    const auto self_state = prepareAnsatz<double>(self, self_params);
    const Vector freq = sampleCounts(self_state, mode.shotCount(), self_rng)
                            .probs();
    if (mode.opponent() == OpponentMode::Exact) {
      return freq.dot(exact_weights);
    }
    Rng opp_rng(deriveSeed(eval_seed, kOppKey));
    const Vector opp_freq =
        sampleCounts(opp_state, mode.shotCount(), opp_rng).probs();
    if (self_is_row) {
      return freq.dot(cg.game.tilde_a * opp_freq);
    }
    return freq.dot(cg.game.tilde_a.transpose() * opp_freq);
  }
};

Vector shiftGradient(const ShiftedEval& eval, const Vector& params,
                     const EvalMode& mode, std::uint64_t stream_seed,
                     std::uint64_t side_tag) {
  Vector grad(params.size());
  Vector shifted = params;
  for (Eigen::Index k = 0; k < params.size(); ++k) {
    shifted[k] = params[k] + kShift;
    const double plus =
        eval(shifted, mode, deriveSeed(stream_seed, side_tag, k, 0));
    shifted[k] = params[k] - kShift;
    const double minus =
        eval(shifted, mode, deriveSeed(stream_seed, side_tag, k, 1));
    shifted[k] = params[k];
    grad[k] = 0.5 * (plus - minus);
  }
  return grad;
}

}  // namespace

CircuitGame makeCircuitGame(EmbeddedGame game, int layers_row,
                            int layers_col) {
  if (layers_row < 1 || layers_col < 1) {
    throw std::invalid_argument("layer counts must be at least 1");
  }
  int q_row = 0;
  while ((Eigen::Index(1) << q_row) < game.M) ++q_row;
  int q_col = 0;
  while ((Eigen::Index(1) << q_col) < game.N) ++q_col;
  if ((Eigen::Index(1) << q_row) != game.M ||
      (Eigen::Index(1) << q_col) != game.N) {
    throw std::invalid_argument("embedded dims must be powers of two");
  }
  if (q_row < 1 || q_col < 1) {
    throw std::invalid_argument("each player needs at least one qubit");
  }
  return CircuitGame{std::move(game), AnsatzSpec{q_row, layers_row},
                     AnsatzSpec{q_col, layers_col}};
}

double expectedPayoff(const CircuitGame& cg, const JointParams& w) {
  checkParams(cg, w);
  const Vector x = bornProbs(cg.row, w.theta);
  const Vector y = bornProbs(cg.col, w.phi);
  return x.dot(cg.game.tilde_a * y);
}

double estimatedPayoff(const CircuitGame& cg, const JointParams& w,
                       long shots, Rng& rng, OpponentMode opp) {
  checkParams(cg, w);
  if (shots < 1) throw std::invalid_argument("shots must be at least 1");
  Rng row_rng = rng.split();
  const auto row_state = prepareAnsatz<double>(cg.row, w.theta);
  const Vector x = sampleCounts(row_state, shots, row_rng).probs();
  if (opp == OpponentMode::Exact) {
    return x.dot(cg.game.tilde_a * bornProbs(cg.col, w.phi));
  }
  Rng col_rng = rng.split();
  const auto col_state = prepareAnsatz<double>(cg.col, w.phi);
  const Vector y = sampleCounts(col_state, shots, col_rng).probs();
  return x.dot(cg.game.tilde_a * y);
}

Vector gradRow(const CircuitGame& cg, const JointParams& w,
               const EvalMode& mode, std::uint64_t stream_seed) {
  checkParams(cg, w);
  const auto opp_state = prepareAnsatz<double>(cg.col, w.phi);
  const Vector weights = cg.game.tilde_a * opp_state.amps().cwiseAbs2().matrix();
  const ShiftedEval eval{cg, cg.row, opp_state, true, weights};
  return shiftGradient(eval, w.theta, mode, stream_seed, kRowTag);
}

Vector gradCol(const CircuitGame& cg, const JointParams& w,
               const EvalMode& mode, std::uint64_t stream_seed) {
  checkParams(cg, w);
  const auto opp_state = prepareAnsatz<double>(cg.row, w.theta);
  const Vector weights =
      cg.game.tilde_a.transpose() * opp_state.amps().cwiseAbs2().matrix();
  const ShiftedEval eval{cg, cg.col, opp_state, false, weights};
  return shiftGradient(eval, w.phi, mode, stream_seed, kColTag);
}

GradientEstimate saddleOperator(const CircuitGame& cg, const JointParams& w,
                                const EvalMode& mode,
                                std::uint64_t stream_seed) {
  Vector g(w.dim());
  g << gradRow(cg, w, mode, stream_seed), -gradCol(cg, w, mode, stream_seed);
  return GradientEstimate{std::move(g), mode, 2 * w.dim()};
}

}  // namespace vqeg
