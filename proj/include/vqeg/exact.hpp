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

#include "vqeg/game.hpp"

namespace vqeg {

/// An exact equilibrium profile and game value; the ground truth every
/// approximate solution is certified against.
struct ExactSolution {
  MixedStrategy x;
  MixedStrategy y;
  double value;
};

/// Solves the game by linear programming: after an entrywise shift that
/// makes the value positive, one dense simplex solve yields the column
/// player's strategy, and the constraint duals yield the row player's.
/// Throws SolverFailure if the pivot cap is exceeded.
ExactSolution solveLp(const PayoffMatrix& a);

/// Independent oracle for solveLp: enumerates equal-size support pairs,
/// solves the indifference systems, and returns the first profile passing
/// the feasibility and equilibrium checks. Requires m <= 5 and n <= 5.
ExactSolution solveSupportEnum(const PayoffMatrix& a);

}  // namespace vqeg
