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

#include "vqeg/eg.hpp"

#include <algorithm>
#include <cmath>

namespace vqeg {

namespace {

// Seed-derivation tags for the run's substreams.
constexpr std::uint64_t kInitTag = 100;
constexpr std::uint64_t kStepTag = 101;

// Seeds must land in distinct basins for best-of-K to explore the
// nonconvex landscape; a pi-wide init spans every computational basis
// state while staying clear of the default box walls.
constexpr double kInitHalfwidth = std::numbers::pi;

void validate(const PayoffMatrix& a, const EGConfig& cfg) {
  if (a.rows() < 2 || a.cols() < 2) {
    throw std::invalid_argument("game must have at least 2 actions per player");
  }
  if (cfg.steps < 1) throw std::invalid_argument("steps must be at least 1");
  if (!(cfg.eta > 0)) throw std::invalid_argument("eta must be positive");
  if (!(cfg.box_halfwidth > 0)) {
    throw std::invalid_argument("box halfwidth must be positive");
  }
  if (cfg.record_every < 1) {
    throw std::invalid_argument("record_every must be at least 1");
  }
}

MixedStrategy meanStrategy(const std::vector<Vector>& probs,
                           std::size_t from) {
  Vector acc = Vector::Zero(probs.front().size());
  for (std::size_t i = from; i < probs.size(); ++i) acc += probs[i];
  return MixedStrategy(std::move(acc));
}

}  // namespace

int defaultLayerCount(Eigen::Index padded_dim) {
  return padded_dim <= 8 ? 3 : 4;
}

Vector projectBox(const Vector& w, double halfwidth) {
  if (!(halfwidth > 0)) {
    throw std::invalid_argument("box halfwidth must be positive");
  }
  return w.cwiseMax(-halfwidth).cwiseMin(halfwidth);
}

double projectedResidual(const CircuitGame& cg, const JointParams& w,
                         double eta, double halfwidth) {
  const Eigen::Index row_dim = cg.rowParamCount();
  return genericProjectedResidual(
      w.stacked(),
      [&](const Vector& v) {
        return Vector(-saddleOperator(cg, JointParams::fromStacked(v, row_dim),
                                      EvalMode::exact())
                           .g);
      },
      eta, halfwidth);
}

std::pair<RunResult, RunTrace> runVqeg(const PayoffMatrix& a,
                                       const EGConfig& cfg) {
  validate(a, cfg);

  const EmbeddedGame embedded = embedDominated(a, cfg.c_margin);
  EGConfig resolved = cfg;
  if (resolved.layers_row < 1) {
    resolved.layers_row = defaultLayerCount(embedded.M);
  }
  if (resolved.layers_col < 1) {
    resolved.layers_col = defaultLayerCount(embedded.N);
  }
  const CircuitGame cg =
      makeCircuitGame(embedded, resolved.layers_row, resolved.layers_col);

  const Eigen::Index row_dim = cg.rowParamCount();
  const Eigen::Index d = cg.paramCount();

  Rng init_rng(deriveSeed(resolved.seed, kInitTag));
  Vector w(d);
  for (Eigen::Index k = 0; k < d; ++k) {
    w[k] = init_rng.uniform(-kInitHalfwidth, kInitHalfwidth);
  }
  w = projectBox(w, resolved.box_halfwidth);

  // The update must ascend L in theta (the row player maximizes) and
  // descend in phi, so the step direction is the negated saddle operator:
  // with the (grad_row, -grad_col) stacking, w - eta * (-g) moves both
  // players toward their own optima. Applied literally, w - eta * g walks
  // away from the max-min saddle and piles mass onto dominated actions.
  const auto stochastic_op = [&](const Vector& v, std::uint64_t seed) {
    return Vector(-saddleOperator(cg, JointParams::fromStacked(v, row_dim),
                                  resolved.mode, seed)
                       .g);
  };

  RunTrace trace;
  std::vector<Vector> recorded_x;
  std::vector<Vector> recorded_y;
  long evals = 0;

  for (long t = 0; t < resolved.steps; ++t) {
    const Vector g_here = stochastic_op(w, deriveSeed(resolved.seed, kStepTag, t, 0));
    const Vector w_half = projectBox(w - resolved.eta * g_here,
                                     resolved.box_halfwidth);
    const Vector g_half =
        stochastic_op(w_half, deriveSeed(resolved.seed, kStepTag, t, 1));
    w = projectBox(w - resolved.eta * g_half, resolved.box_halfwidth);
    evals += 4 * d;

    if (t % resolved.record_every != 0 && t != resolved.steps - 1) continue;

    const JointParams params = JointParams::fromStacked(w, row_dim);
    const Vector x_padded =
        prepareAnsatz<double>(cg.row, params.theta).amps().cwiseAbs2();
    const Vector y_padded =
        prepareAnsatz<double>(cg.col, params.phi).amps().cwiseAbs2();
    evals += 2;

    const auto x_restricted =
        restrictStrategy(MixedStrategy(x_padded), embedded.m);
    const auto y_restricted =
        restrictStrategy(MixedStrategy(y_padded), embedded.n);
    recorded_x.push_back(x_restricted.strategy.probs());
    recorded_y.push_back(y_restricted.strategy.probs());

    const double gap = nashGap(a, x_restricted.strategy, y_restricted.strategy);
    const double avg_gap =
        nashGap(a, meanStrategy(recorded_x, 0), meanStrategy(recorded_y, 0));
    const double residual =
        projectedResidual(cg, params, resolved.eta, resolved.box_halfwidth);

    trace.push_back(TraceRecord{t, x_padded.dot(embedded.tilde_a * y_padded),
                                gap, avg_gap, residual,
                                x_restricted.leakage, y_restricted.leakage,
                                evals});
  }

  const std::size_t records = recorded_x.size();
  const std::size_t tail =
      std::max<std::size_t>(1, (records + 4) / 5);  // ceil(records / 5)
  MixedStrategy x_avg = meanStrategy(recorded_x, records - tail);
  MixedStrategy y_avg = meanStrategy(recorded_y, records - tail);

  MixedStrategy x_last(recorded_x.back());
  MixedStrategy y_last(recorded_y.back());
  const double gap_last = trace.back().gap;
  const double gap_avg = nashGap(a, x_avg, y_avg);

  RunResult result{JointParams::fromStacked(w, row_dim),
                   std::move(x_last),
                   std::move(y_last),
                   std::move(x_avg),
                   std::move(y_avg),
                   gap_last,
                   gap_avg,
                   std::min(gap_last, gap_avg) <= kPassEpsilon,
                   resolved};
  return {std::move(result), std::move(trace)};
}

std::pair<RunResult, RunTrace> runVqeg(const GameInstance& instance,
                                       const EGConfig& cfg) {
  return runVqeg(instance.matrix, cfg);
}

}  // namespace vqeg
