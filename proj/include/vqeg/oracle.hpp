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

#include "vqeg/game.hpp"
#include "vqeg/qstate.hpp"
#include "vqeg/rng.hpp"

namespace vqeg {

/// Joint circuit parameters omega = (theta, phi) for the two players.
struct JointParams {
  Vector theta;
  Vector phi;

  Eigen::Index dim() const { return theta.size() + phi.size(); }

  Vector stacked() const {
    Vector w(dim());
    w << theta, phi;
    return w;
  }

  static JointParams fromStacked(const Vector& w, Eigen::Index row_dim) {
    if (row_dim < 0 || row_dim > w.size()) {
      throw std::invalid_argument("row parameter count out of range");
    }
    return JointParams{w.head(row_dim), w.tail(w.size() - row_dim)};
  }
};

/// When sampling, whether the opponent's circuit is also measured with
/// finite shots or evaluated from its exact Born distribution. The paper's
/// estimator conditions on the opponent's exact distribution; sampling both
/// sides stays unbiased by independence.
enum class OpponentMode { Sampled, Exact };

/// Payoff-oracle evaluation mode: exact Born expectations, or finite-shot
/// estimates with `shotCount()` shots per shifted circuit evaluation.
class EvalMode {
 public:
  static EvalMode exact() { return EvalMode(0, OpponentMode::Exact); }

  static EvalMode shots(long count, OpponentMode opp = OpponentMode::Sampled) {
    if (count < 1) {
      throw std::invalid_argument(
          "shot count must be at least 1; use EvalMode::exact() instead");
    }
    return EvalMode(count, opp);
  }

  bool isExact() const { return shots_ == 0; }
  long shotCount() const { return shots_; }
  OpponentMode opponent() const { return opponent_; }

 private:
  EvalMode(long shots, OpponentMode opp) : shots_(shots), opponent_(opp) {}

  long shots_;
  OpponentMode opponent_;
};

/// An embedded game together with the two players' circuit shapes; the
/// domain of the payoff oracle L(theta, phi) = <x_theta, A~ y_phi>.
struct CircuitGame {
  EmbeddedGame game;
  AnsatzSpec row;
  AnsatzSpec col;

  Eigen::Index rowParamCount() const { return row.paramCount(); }
  Eigen::Index colParamCount() const { return col.paramCount(); }
  Eigen::Index paramCount() const {
    return rowParamCount() + colParamCount();
  }
};

/// Builds a CircuitGame, checking 2^q matches the embedded dimensions.
CircuitGame makeCircuitGame(EmbeddedGame game, int layers_row, int layers_col);

/// One stochastic (or exact) draw of the saddle operator
/// G(omega) = (grad_theta L, -grad_phi L).
struct GradientEstimate {
  Vector g;
  EvalMode mode;
  long circuit_evals;  // shifted payoff evaluations: 2 per coordinate
};

/// Exact embedded payoff <x_theta, A~ y_phi> from Born distributions.
double expectedPayoff(const CircuitGame& cg, const JointParams& w);

/// Finite-shot payoff estimate; samples both circuits with `shots` shots
/// (or only the row circuit under OpponentMode::Exact). Unbiased.
double estimatedPayoff(const CircuitGame& cg, const JointParams& w,
                       long shots, Rng& rng,
                       OpponentMode opp = OpponentMode::Sampled);

/// Parameter-shift gradient of L in theta: coordinate k is
/// (L(theta + pi/2 e_k, phi) - L(theta - pi/2 e_k, phi)) / 2.
/// In shot mode every shifted evaluation draws a fresh substream keyed by
/// (coordinate, side, player) off `stream_seed`.
Vector gradRow(const CircuitGame& cg, const JointParams& w,
               const EvalMode& mode, std::uint64_t stream_seed = 0);

/// Mirror of gradRow for the column player's parameters.
Vector gradCol(const CircuitGame& cg, const JointParams& w,
               const EvalMode& mode, std::uint64_t stream_seed = 0);

/// Stacks (gradRow, -gradCol); 2 * dim shifted circuit evaluations.
GradientEstimate saddleOperator(const CircuitGame& cg, const JointParams& w,
                                const EvalMode& mode,
                                std::uint64_t stream_seed = 0);

}  // namespace vqeg
