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

#include "vqeg/exact.hpp"
#include "vqeg/game.hpp"
#include "vqeg/instances.hpp"
#include "vqeg/rng.hpp"

using namespace vqeg;

namespace {

PayoffMatrix randomGame(Eigen::Index m, Eigen::Index n, Rng& rng) {
  Matrix a(m, n);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = rng.uniform(-1.0, 1.0);
  }
  return PayoffMatrix(std::move(a));
}

void checkCertificate(const PayoffMatrix& a, const ExactSolution& s) {
  CHECK(nashGap(a, s.x, s.y) <= 1e-9);
  CHECK(payoff(a, s.x, s.y) == doctest::Approx(s.value).epsilon(1e-9));
}

}  // namespace

TEST_CASE("lp solves matching pennies") {
  Matrix a(2, 2);
  a << 1, -1, -1, 1;
  const ExactSolution s = solveLp(PayoffMatrix(a));
  CHECK(s.value == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(s.x[0] == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(s.y[0] == doctest::Approx(0.5).epsilon(1e-9));
  checkCertificate(PayoffMatrix(a), s);
}

TEST_CASE("lp solves rock paper scissors") {
  Matrix a(3, 3);
  a << 0, -1, 1, 1, 0, -1, -1, 1, 0;
  const ExactSolution s = solveLp(PayoffMatrix(a));
  CHECK(s.value == doctest::Approx(0.0).epsilon(1e-10));
  for (int i = 0; i < 3; ++i) {
    CHECK(s.x[i] == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
    CHECK(s.y[i] == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
  }
  checkCertificate(PayoffMatrix(a), s);
}

TEST_CASE("lp finds the pure equilibrium of dominant-row games") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const GameInstance g = genDominantRow(4, seed);
    const ExactSolution lp = solveLp(g.matrix);
    const ExactSolution enumerated = solveSupportEnum(g.matrix);
    const Eigen::Index last = g.matrix.rows() - 1;
    CHECK(lp.value ==
          doctest::Approx(g.matrix.entries().row(last).minCoeff())
              .epsilon(1e-9));
    CHECK(std::abs(lp.value - enumerated.value) <= 1e-9);
    checkCertificate(g.matrix, lp);
    checkCertificate(g.matrix, enumerated);
  }
}

TEST_CASE("lp handles rectangular games") {
  Matrix a(2, 3);
  a << 1, -1, 0.5, -1, 1, -0.5;
  const ExactSolution s = solveLp(PayoffMatrix(a));
  checkCertificate(PayoffMatrix(a), s);
  const ExactSolution e = solveSupportEnum(PayoffMatrix(a));
  CHECK(std::abs(s.value - e.value) <= 1e-9);
}

TEST_CASE("support enumeration matches lp across random games") {
  Rng rng(101);
  for (int trial = 0; trial < 100; ++trial) {
    const PayoffMatrix a = randomGame(3, 3, rng);
    const ExactSolution lp = solveLp(a);
    const ExactSolution en = solveSupportEnum(a);
    CHECK(std::abs(lp.value - en.value) <= 1e-9);
    checkCertificate(a, lp);
    checkCertificate(a, en);
  }
}

TEST_CASE("support enumeration solves the 1x1 game") {
  Matrix a(1, 1);
  a << 5;
  const ExactSolution s = solveSupportEnum(PayoffMatrix(a));
  CHECK(s.value == doctest::Approx(5.0));
  CHECK(s.x[0] == doctest::Approx(1.0));
  CHECK(s.y[0] == doctest::Approx(1.0));
}

TEST_CASE("support enumeration rejects large games") {
  Rng rng(5);
  const PayoffMatrix a = randomGame(6, 6, rng);
  CHECK_THROWS_AS(solveSupportEnum(a), std::invalid_argument);
}

TEST_CASE("lp value is invariant under the dominated embedding") {
  Rng rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const PayoffMatrix a = randomGame(5, 3, rng);
    const EmbeddedGame e = embedDominated(a);
    CHECK(std::abs(solveLp(a).value - solveLp(PayoffMatrix(e.tilde_a)).value) <=
          1e-9);
  }
}

TEST_CASE("lp value shifts with constant offsets") {
  Rng rng(9);
  const PayoffMatrix a = randomGame(4, 4, rng);
  const double base = solveLp(a).value;
  for (double k : {-3.0, 0.5, 2.0}) {
    const PayoffMatrix shifted{Matrix(a.entries().array() + k)};
    CHECK(solveLp(shifted).value == doctest::Approx(base + k).epsilon(1e-9));
  }
}
