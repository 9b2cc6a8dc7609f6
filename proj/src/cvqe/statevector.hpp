// Copyright 2026 The cvqe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cvqe/problem.hpp"

namespace cvqe {

inline constexpr int kDefaultMaxQubits = 20;
inline constexpr double kNormTolerance = 1e-10;

/// Pure state on n qubits. Amplitude k belongs to the basis state whose
/// MSB-first bits are bit_of(k, 0..n-1).
class QuantumState {
 public:
  QuantumState(int n, std::vector<std::complex<double>> amplitudes);

  /// Computational basis state e_k.
  static QuantumState basis(int n, std::uint64_t k);

  int n() const { return n_; }
  std::size_t dim() const { return amplitudes_.size(); }
  const std::vector<std::complex<double>>& amplitudes() const { return amplitudes_; }

  /// Outcome distribution p_k = |x_k|^2.
  std::vector<double> probabilities() const;

 private:
  int n_;
  std::vector<std::complex<double>> amplitudes_;
};

enum class Entanglement { kFull };

std::string to_string(Entanglement e);
Entanglement entanglement_from_string(const std::string& name);

/// R_Y rotation layers alternating with CX entanglers. With the full pattern,
/// each entangler applies CX(i -> j) for every i < j in ascending (i, j)
/// order. Parameters are laid out layer-major: theta[layer * n + qubit].
struct AnsatzConfig {
  int n = 1;
  int layers = 3;
  bool final_rotation = true;
  Entanglement entanglement = Entanglement::kFull;

  int param_count() const { return (final_rotation ? layers + 1 : layers) * n; }
};

/// Real amplitudes of U(theta)|0...0>. Every gate in the ansatz is real, so
/// this is the working representation for the optimizers; state_of wraps it.
class Ansatz {
 public:
  explicit Ansatz(const AnsatzConfig& cfg);

  const AnsatzConfig& config() const { return cfg_; }
  int param_count() const { return cfg_.param_count(); }
  std::size_t dim() const { return std::size_t{1} << cfg_.n; }

  void prepare(std::span<const double> theta, std::vector<double>& psi) const;

  /// Scratch buffers for the evaluation calls below; one per thread.
  struct Workspace {
    std::vector<double> psi, lam, mu;
  };

  /// <x(theta)| diag(values) |x(theta)>.
  double energy(std::span<const double> theta, std::span<const double> values) const;
  double energy(std::span<const double> theta, std::span<const double> values,
                Workspace& ws) const;

  /// Exact gradient of energy() by reverse-mode (adjoint) sweep. Returns the
  /// energy; writes d energy / d theta_i into `grad`.
  double energy_gradient(std::span<const double> theta, std::span<const double> values,
                         std::span<double> grad) const;
  double energy_gradient(std::span<const double> theta, std::span<const double> values,
                         std::span<double> grad, Workspace& ws) const;

 private:
  struct Op {
    bool rotation;
    int a;  // rotation: qubit; cx: control
    int b;  // rotation: parameter index; cx: target
  };

  void check_theta(std::span<const double> theta) const;

  AnsatzConfig cfg_;
  std::vector<Op> ops_;
};

/// Diagonal observable H with H e_k = values[k] e_k.
class DiagonalObservable {
 public:
  DiagonalObservable(int n, std::vector<double> values);

  int n() const { return n_; }
  const std::vector<double>& values() const { return values_; }
  double min() const;
  double max() const;

 private:
  int n_;
  std::vector<double> values_;
};

QuantumState state_of(const AnsatzConfig& cfg, std::span<const double> theta);

/// values[k] = f(bits(k)), evaluated directly per index.
DiagonalObservable diagonal_of(const QuadraticForm& form, int max_qubits = kDefaultMaxQubits);

/// Same diagonal assembled from the Pauli-Z expansion
///   sum_ij Abar_ij Z_i Z_j + sum_i cbar_i Z_i + dbar I.
DiagonalObservable pauli_diagonal_of(const SpinForm& spin, int max_qubits = kDefaultMaxQubits);

double expectation(const QuantumState& state, const DiagonalObservable& obs);

/// Basis-index draws from p_k = |x_k|^2 by inverse-CDF on Rng::uniform().
std::vector<std::uint64_t> sample_indices(std::span<const double> pmf, int shots,
                                          std::uint64_t seed);
std::vector<BitVector> sample(const QuantumState& state, int shots, std::uint64_t seed);

/// Sample mean of f over `shots` measurement outcomes.
double estimate_expectation(const QuantumState& state, const QuadraticForm& form, int shots,
                            std::uint64_t seed);

}  // namespace cvqe
