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

#include "vqeg/instances.hpp"

#include <stdexcept>

#include "vqeg/rng.hpp"

namespace vqeg {

namespace {

// Stream tags keep the generator families on disjoint substreams.
constexpr std::uint64_t kDominantTag = 1;
constexpr std::uint64_t kRandomTag = 2;

void checkSize(Eigen::Index size) {
  if (size < 2) {
    throw std::invalid_argument("instance size must be at least 2");
  }
}

std::string makeLabel(const char* name, Eigen::Index size,
                      std::uint64_t seed, bool seeded) {
  std::string label = std::string(name) + " " + std::to_string(size) + "x" +
                      std::to_string(size);
  if (seeded) label += " (seed " + std::to_string(seed) + ")";
  return label;
}

}  // namespace

GameInstance genDominantRow(Eigen::Index size, std::uint64_t seed) {
  checkSize(size);
  Rng rng(deriveSeed(seed, kDominantTag));
  Matrix a(size, size);
  for (Eigen::Index i = 0; i + 1 < size; ++i) {
    for (Eigen::Index j = 0; j < size; ++j) {
      a(i, j) = rng.uniform(-1.0, 1.0);
    }
  }
  for (Eigen::Index j = 0; j < size; ++j) {
    const double best_other = a.col(j).head(size - 1).maxCoeff();
    a(size - 1, j) = best_other + rng.uniform(0.05, 0.2);
  }
  return GameInstance{PayoffMatrix(std::move(a)), InstanceKind::DominantRow,
                      seed, makeLabel("dominant-row", size, seed, true)};
}

GameInstance genMatchingPennies(Eigen::Index size) {
  checkSize(size);
  Matrix a = Matrix::Constant(size, size, -1.0);
  a.diagonal().setConstant(1.0);
  return GameInstance{PayoffMatrix(std::move(a)),
                      InstanceKind::MatchingPennies, 0,
                      makeLabel("matching-pennies", size, 0, false)};
}

GameInstance genRandom(Eigen::Index size, std::uint64_t seed) {
  checkSize(size);
  Rng rng(deriveSeed(seed, kRandomTag));
  Matrix a(size, size);
  for (Eigen::Index i = 0; i < size; ++i) {
    for (Eigen::Index j = 0; j < size; ++j) {
      a(i, j) = rng.uniform(-1.0, 1.0);
    }
  }
  return GameInstance{PayoffMatrix(std::move(a)), InstanceKind::Random, seed,
                      makeLabel("random", size, seed, true)};
}

const char* kindToken(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::DominantRow: return "dominant";
    case InstanceKind::MatchingPennies: return "pennies";
    case InstanceKind::Random: return "random";
  }
  throw std::invalid_argument("unknown instance kind");
}

InstanceKind kindFromToken(const std::string& token) {
  if (token == "dominant") return InstanceKind::DominantRow;
  if (token == "pennies") return InstanceKind::MatchingPennies;
  if (token == "random") return InstanceKind::Random;
  throw std::invalid_argument("unknown game kind: " + token);
}

}  // namespace vqeg
