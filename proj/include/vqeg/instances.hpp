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
#include <string>

#include "vqeg/game.hpp"

namespace vqeg {

enum class InstanceKind { DominantRow, MatchingPennies, Random };

/// A generated benchmark game. Regeneration from (kind, size, seed) is
/// bit-identical.
struct GameInstance {
  PayoffMatrix matrix;
  InstanceKind kind;
  std::uint64_t seed;
  std::string label;
};

/// Rows 0..size-2 are uniform in [-1, 1]; the last row beats the best other
/// entry of each column by a margin in [0.05, 0.2], so it strictly dominates
/// and the game has a pure equilibrium at (last row, argmin of last row).
GameInstance genDominantRow(Eigen::Index size, std::uint64_t seed);

/// +1 on the diagonal, -1 off it. The uniform profile is an equilibrium
/// with value (2 - size) / size.
GameInstance genMatchingPennies(Eigen::Index size);

/// All entries uniform in [-1, 1].
GameInstance genRandom(Eigen::Index size, std::uint64_t seed);

/// CLI token for a kind: "dominant" | "pennies" | "random".
const char* kindToken(InstanceKind kind);

/// Inverse of kindToken; throws std::invalid_argument on unknown tokens.
InstanceKind kindFromToken(const std::string& token);

}  // namespace vqeg
