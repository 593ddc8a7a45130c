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

namespace vqeg {

// Stateless splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Derives an independent stream seed from a root seed and a key path.
// Identical (root, keys...) always map to the same stream, so consumers
// that key their substreams by position are reproducible under any
// evaluation order.
constexpr std::uint64_t deriveSeed(std::uint64_t root, std::uint64_t key) {
  return mix64(root + 0x9E3779B97F4A7C15ull * (key + 1));
}

constexpr std::uint64_t deriveSeed(std::uint64_t root, std::uint64_t k1,
                                   std::uint64_t k2) {
  return deriveSeed(deriveSeed(root, k1), k2);
}

constexpr std::uint64_t deriveSeed(std::uint64_t root, std::uint64_t k1,
                                   std::uint64_t k2, std::uint64_t k3) {
  return deriveSeed(deriveSeed(root, k1, k2), k3);
}

constexpr std::uint64_t deriveSeed(std::uint64_t root, std::uint64_t k1,
                                   std::uint64_t k2, std::uint64_t k3,
                                   std::uint64_t k4) {
  return deriveSeed(deriveSeed(root, k1, k2, k3), k4);
}

// Value-typed splitmix64 generator. Small state, cheap to split, and fully
// specified here, so streams are bit-identical across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ull;
    return mix64(state_);
  }

  // Uniform in [0, 1).
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform01();
  }

  // Child stream; advances this stream by one draw.
  Rng split() { return Rng(next()); }

 private:
  std::uint64_t state_;
};

}  // namespace vqeg
