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

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "vqeg/game.hpp"
#include "vqeg/rng.hpp"

namespace vqeg {

/// Pure-state simulator over `qubits` qubits. Qubit k maps to bit k of the
/// amplitude index (qubit 0 is the least significant bit). All gates are
/// unitary, so the square norm stays 1 up to roundoff.
template <typename Scalar = double>
class BasicStateVector {
 public:
  using Complex = std::complex<Scalar>;
  using AmpVector = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;

  /// |0...0>. Supports 1 to 20 qubits.
  static BasicStateVector zero(int qubits) {
    if (qubits < 1 || qubits > 20) {
      throw std::invalid_argument("qubit count must be in [1, 20]");
    }
    BasicStateVector s(qubits);
    s.amps_[0] = Complex(1, 0);
    return s;
  }

  int qubits() const { return qubits_; }
  Eigen::Index dim() const { return amps_.size(); }
  const AmpVector& amps() const { return amps_; }

  /// R_y: the real rotation [[cos(a/2), -sin(a/2)], [sin(a/2), cos(a/2)]].
  void applyRy(int qubit, Scalar angle) {
    checkQubit(qubit);
    const Scalar c = std::cos(angle / 2);
    const Scalar s = std::sin(angle / 2);
    const Eigen::Index stride = Eigen::Index(1) << qubit;
    for (Eigen::Index base = 0; base < dim(); base += 2 * stride) {
      for (Eigen::Index off = 0; off < stride; ++off) {
        Complex& a0 = amps_[base + off];
        Complex& a1 = amps_[base + off + stride];
        const Complex t0 = c * a0 - s * a1;
        a1 = s * a0 + c * a1;
        a0 = t0;
      }
    }
  }

  /// R_z: diag(exp(-i a/2), exp(+i a/2)).
  void applyRz(int qubit, Scalar angle) {
    checkQubit(qubit);
    const Complex lower = std::polar(Scalar(1), -angle / 2);
    const Complex upper = std::polar(Scalar(1), angle / 2);
    const Eigen::Index bit = Eigen::Index(1) << qubit;
    for (Eigen::Index i = 0; i < dim(); ++i) {
      amps_[i] *= (i & bit) ? upper : lower;
    }
  }

  /// CZ: negates amplitudes where both qubits are 1. Symmetric and
  /// self-inverse.
  void applyCz(int q1, int q2) {
    checkQubit(q1);
    checkQubit(q2);
    if (q1 == q2) {
      throw std::invalid_argument("cz needs two distinct qubits");
    }
    const Eigen::Index mask =
        (Eigen::Index(1) << q1) | (Eigen::Index(1) << q2);
    for (Eigen::Index i = 0; i < dim(); ++i) {
      if ((i & mask) == mask) amps_[i] = -amps_[i];
    }
  }

 private:
  explicit BasicStateVector(int qubits)
      : amps_(AmpVector::Zero(Eigen::Index(1) << qubits)), qubits_(qubits) {}

  void checkQubit(int qubit) const {
    if (qubit < 0 || qubit >= qubits_) {
      throw std::invalid_argument("qubit index out of range");
    }
  }

  AmpVector amps_;
  int qubits_;
};

using StateVector = BasicStateVector<double>;

/// Layered hardware-efficient circuit: per layer, R_y then R_z on every
/// qubit, then a CZ ring. Holds 2 * qubits * layers parameters.
struct AnsatzSpec {
  int qubits;
  int layers;

  Eigen::Index paramCount() const {
    return 2 * static_cast<Eigen::Index>(qubits) * layers;
  }
  Eigen::Index dim() const { return Eigen::Index(1) << qubits; }
};

/// Prepares the ansatz state from |0...0>. Parameter layout is layer-major:
/// within layer l, params[l*2q + k] feeds R_y on qubit k and
/// params[l*2q + q + k] feeds R_z on qubit k. The entangler is a CZ ring
/// CZ(0,1), ..., CZ(q-1,0) for q >= 3, the single CZ(0,1) for q == 2, and
/// nothing for q == 1.
template <typename Scalar = double>
BasicStateVector<Scalar> prepareAnsatz(
    const AnsatzSpec& spec,
    const Eigen::Ref<const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>>& params) {
  if (params.size() != spec.paramCount()) {
    throw std::invalid_argument("ansatz expects 2*q*L parameters");
  }
  auto state = BasicStateVector<Scalar>::zero(spec.qubits);
  const int q = spec.qubits;
  for (int layer = 0; layer < spec.layers; ++layer) {
    const Eigen::Index base = static_cast<Eigen::Index>(layer) * 2 * q;
    for (int k = 0; k < q; ++k) state.applyRy(k, params[base + k]);
    for (int k = 0; k < q; ++k) state.applyRz(k, params[base + q + k]);
    if (q == 2) {
      state.applyCz(0, 1);
    } else if (q >= 3) {
      for (int k = 0; k + 1 < q; ++k) state.applyCz(k, k + 1);
      state.applyCz(q - 1, 0);
    }
  }
  return state;
}

/// Born distribution |amp_i|^2 over computational-basis outcomes.
inline MixedStrategy bornDistribution(const StateVector& s) {
  return MixedStrategy(s.amps().cwiseAbs2());
}

/// Empirical outcome frequencies n_i / shots from `shots` independent
/// measurements, drawn by inverse CDF over the cumulative Born weights.
inline MixedStrategy sampleCounts(const StateVector& s, long shots, Rng& rng) {
  if (shots < 1) throw std::invalid_argument("shots must be at least 1");
  const Vector probs = s.amps().cwiseAbs2();
  std::vector<double> cumulative(probs.size());
  double acc = 0.0;
  for (Eigen::Index i = 0; i < probs.size(); ++i) {
    acc += probs[i];
    cumulative[i] = acc;
  }
  Vector counts = Vector::Zero(probs.size());
  for (long shot = 0; shot < shots; ++shot) {
    const double u = rng.uniform01() * acc;
    const auto it =
        std::upper_bound(cumulative.begin(), cumulative.end(), u);
    const Eigen::Index idx = std::min<Eigen::Index>(
        it - cumulative.begin(), probs.size() - 1);
    counts[idx] += 1.0;
  }
  return MixedStrategy(counts / static_cast<double>(shots));
}

}  // namespace vqeg
