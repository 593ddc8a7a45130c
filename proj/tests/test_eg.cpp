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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "vqeg/eg.hpp"
#include "vqeg/instances.hpp"

using namespace vqeg;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("box projection clamps coordinate-wise and is idempotent") {
  Vector w(3);
  w << 0.5, 10.0, -9.0;
  const Vector p = projectBox(w, 2 * kPi);
  CHECK(p[0] == doctest::Approx(0.5));
  CHECK(p[1] == doctest::Approx(2 * kPi));
  CHECK(p[2] == doctest::Approx(-2 * kPi));
  CHECK(projectBox(p, 2 * kPi) == p);
  CHECK_THROWS_AS(projectBox(w, 0.0), std::invalid_argument);
}

TEST_CASE("eg step with a zero operator stays put") {
  Vector w(4);
  w << 0.1, -0.2, 0.3, -0.4;
  const auto [next, half] =
      egStep(w, [](const Vector& v) { return Vector(Vector::Zero(v.size())); },
             0.1, 2 * kPi);
  CHECK(next == w);
  CHECK(half == w);
}

TEST_CASE("extragradient contracts the bilinear rotation that plain descent-ascent inflates") {
  // G(a, b) = (b, -a): the canonical rotation field with a saddle at 0.
  const auto rotation = [](const Vector& v) {
    Vector g(2);
    g << v[1], -v[0];
    return g;
  };
  const double eta = 0.1;
  const double big_box = 1e9;

  Vector w_eg(2), w_gda(2);
  w_eg << 1.0, 1.0;
  w_gda << 1.0, 1.0;
  for (int t = 0; t < 100; ++t) {
    const double norm_eg = w_eg.norm();
    const double norm_gda = w_gda.norm();
    w_eg = egStep(w_eg, rotation, eta, big_box).first;
    w_gda = projectBox(w_gda - eta * rotation(w_gda), big_box);
    CHECK(w_eg.norm() < norm_eg);
    CHECK(w_gda.norm() > norm_gda);
  }
  // Closed form per step: sqrt(1 - eta^2 + eta^4) vs sqrt(1 + eta^2).
  CHECK(w_eg.norm() ==
        doctest::Approx(std::sqrt(2.0) *
                        std::pow(1.0 - 0.01 + 1e-4, 50.0))
            .epsilon(1e-9));
  CHECK(w_gda.norm() ==
        doctest::Approx(std::sqrt(2.0) * std::pow(1.01, 50.0)).epsilon(1e-9));
}

TEST_CASE("eg step respects the box on outward operators") {
  const double halfwidth = 1.0;
  Vector w(2);
  w << 1.0, 0.0;  // on the boundary
  const auto outward = [](const Vector&) {
    Vector g(2);
    g << -1.0, 0.0;  // pushes coordinate 0 past the wall
    return g;
  };
  const auto [next, half] = egStep(w, outward, 0.5, halfwidth);
  CHECK(half[0] == doctest::Approx(1.0));
  CHECK(next[0] == doctest::Approx(1.0));
}

TEST_CASE("projected residual cases") {
  const double eta = 0.2;
  const double halfwidth = 1.0;

  Vector interior(2);
  interior << 0.1, -0.3;
  const auto zero = [](const Vector& v) {
    return Vector(Vector::Zero(v.size()));
  };
  CHECK(genericProjectedResidual(interior, zero, eta, halfwidth) ==
        doctest::Approx(0.0));

  // No clamping active: residual equals the operator norm.
  Vector g_val(2);
  g_val << 0.6, -0.8;
  const auto constant = [&](const Vector&) { return g_val; };
  CHECK(genericProjectedResidual(interior, constant, eta, halfwidth) ==
        doctest::Approx(1.0).epsilon(1e-12));

  // Boundary point with an outward-pointing component: the clamped
  // coordinate contributes nothing, so the residual drops below ||G||.
  Vector boundary(2);
  boundary << 1.0, 0.0;
  Vector outward(2);
  outward << -1.0, 1.0;
  const auto push = [&](const Vector&) { return outward; };
  const double r = genericProjectedResidual(boundary, push, eta, halfwidth);
  CHECK(r == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r < outward.norm());
}

TEST_CASE("run validates its configuration") {
  const GameInstance g = genMatchingPennies(2);
  EGConfig cfg;
  cfg.steps = 0;
  CHECK_THROWS_AS(runVqeg(g, cfg), std::invalid_argument);
  cfg.steps = 10;
  cfg.eta = 0.0;
  CHECK_THROWS_AS(runVqeg(g, cfg), std::invalid_argument);
  // Shots are a positive count; exact mode is its own state, not shots=0.
  CHECK_THROWS_AS(EvalMode::shots(0), std::invalid_argument);
}

TEST_CASE("run solves 2x2 matching pennies in exact mode") {
  EGConfig cfg;
  cfg.steps = 2000;
  cfg.seed = 1;
  const auto [result, trace] = runVqeg(genMatchingPennies(2), cfg);
  CHECK(result.passed);
  CHECK(std::min(result.final_gap_last, result.final_gap_avg) <= kPassEpsilon);
  CHECK(result.final_params.theta.size() == result.config.layers_row * 2);
}

TEST_CASE("run solves dominant-row 4x4 with two layers, best of five seeds") {
  double best = 1e9;
  const GameInstance g = genDominantRow(4, 7);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    EGConfig cfg;
    cfg.steps = 2000;
    cfg.seed = seed;
    cfg.layers_row = 2;
    cfg.layers_col = 2;
    const auto [result, trace] = runVqeg(g, cfg);
    best = std::min(best,
                    std::min(result.final_gap_last, result.final_gap_avg));
    if (best <= kPassEpsilon) break;
  }
  CHECK(best <= kPassEpsilon);
}

TEST_CASE("iterates remain inside the box and the ledger is exact") {
  EGConfig cfg;
  cfg.steps = 7;
  cfg.record_every = 3;
  cfg.seed = 3;
  cfg.box_halfwidth = 0.05;  // small box so clamping actually occurs
  const auto [result, trace] = runVqeg(genMatchingPennies(4), cfg);

  CHECK(result.final_params.stacked().cwiseAbs().maxCoeff() <=
        cfg.box_halfwidth + 1e-15);

  // Records at t = 0, 3, 6 (6 is also the final step).
  REQUIRE(trace.size() == 3);
  const Eigen::Index d = result.final_params.dim();
  long records_seen = 0;
  for (const TraceRecord& r : trace) {
    ++records_seen;
    CHECK(r.evals == 4 * d * (r.t + 1) + 2 * records_seen);
    CHECK(r.gap >= 0.0);
    CHECK(r.leak_row >= 0.0);
    CHECK(r.leak_row <= 1.0);
    CHECK(r.leak_col <= 1.0);
  }
}

TEST_CASE("padded games report leakage and converge on the restricted game") {
  // 3x3 embeds into 4x4 with one dummy action per player.
  const GameInstance g = genRandom(3, 5);
  EGConfig cfg;
  cfg.steps = 1500;
  cfg.seed = 2;
  const auto [result, trace] = runVqeg(g, cfg);
  CHECK(result.x_last.size() == 3);
  CHECK(result.y_last.size() == 3);
  for (const TraceRecord& r : trace) {
    CHECK(r.leak_row >= 0.0);
    CHECK(r.leak_col >= 0.0);
  }
}

TEST_CASE("identical configs give bit-identical traces") {
  const GameInstance g = genRandom(4, 11);
  EGConfig cfg;
  cfg.steps = 40;
  cfg.record_every = 5;
  cfg.seed = 17;
  cfg.mode = EvalMode::shots(32);
  const auto [r1, t1] = runVqeg(g, cfg);
  const auto [r2, t2] = runVqeg(g, cfg);
  REQUIRE(t1.size() == t2.size());
  for (std::size_t i = 0; i < t1.size(); ++i) {
    CHECK(t1[i].t == t2[i].t);
    CHECK(t1[i].value == t2[i].value);
    CHECK(t1[i].gap == t2[i].gap);
    CHECK(t1[i].avg_gap == t2[i].avg_gap);
    CHECK(t1[i].residual == t2[i].residual);
    CHECK(t1[i].evals == t2[i].evals);
  }
  CHECK(r1.final_params.stacked() == r2.final_params.stacked());
}

TEST_CASE("default layer depths follow the padded size") {
  CHECK(defaultLayerCount(2) == 3);
  CHECK(defaultLayerCount(8) == 3);
  CHECK(defaultLayerCount(16) == 4);
  CHECK(defaultLayerCount(32) == 4);
}
