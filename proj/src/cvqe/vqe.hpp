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

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cvqe/statevector.hpp"

namespace cvqe {

enum class GradientMode {
  kParameterShift,
  kFiniteDifference,
  /// Reverse-mode sweep; same exact derivative as parameter shift at O(P)
  /// circuit cost instead of O(P^2).
  kAdjoint,
};

std::string to_string(GradientMode mode);
GradientMode gradient_mode_from_string(const std::string& name);

enum class InitMode {
  kZeros,
  kSeededUniform,
  /// pi/2 on the first rotation layer, zeros elsewhere: the uniform
  /// superposition over all bitstrings.
  kSuperposition,
};

std::string to_string(InitMode mode);
InitMode init_mode_from_string(const std::string& name);

struct VqeSettings {
  int max_iterations = 1000;
  int restarts = 4;
  GradientMode gradient_mode = GradientMode::kAdjoint;
  /// Stop a descent once one iteration improves F by less than this.
  double convergence_tol = 1e-8;
  /// Start of restart #1; restarts #2.. are always seeded-uniform on [0, 2pi).
  InitMode init_mode = InitMode::kZeros;
  /// 0 = exact expectations; otherwise F and its parameter-shift gradient are
  /// sample averages over this many shots.
  int shots = 0;
  /// Restarts whose values lie within this much of the best count as tied;
  /// the lowest-index tied restart is returned.
  double tie_tol = 0.0;

  void validate() const;
};

struct VqeResult {
  std::vector<double> theta_star;
  double value = 0.0;
  std::vector<double> pmf;
  /// Objective evaluations across all restarts. A gradient counts as 1
  /// (adjoint) or 2P (parameter shift, finite difference).
  long long evaluations = 0;
  bool converged = false;
  int best_restart = 0;
  /// F after each accepted step of the winning restart, starting with F(x0).
  std::vector<double> history;
};

inline constexpr double kFiniteDifferenceStep = 1e-5;

std::vector<double> gradient(const AnsatzConfig& cfg, const DiagonalObservable& obs,
                             std::span<const double> theta, GradientMode mode);

/// Function value at x, plus the gradient when `grad` is non-empty. The
/// counter receives the evaluation cost of the call.
using Objective = std::function<double(std::span<const double> x, std::span<double> grad,
                                       long long& evaluations)>;

struct LocalRun {
  std::vector<double> x;
  double value = 0.0;
  long long evaluations = 0;
  bool converged = false;
  std::vector<double> history;
};

/// Local descent strategy used for every restart.
class LocalOptimizer {
 public:
  virtual ~LocalOptimizer() = default;
  virtual LocalRun run(const Objective& objective, std::vector<double> x0) const = 0;
};

/// Steepest descent with Armijo backtracking: try step 1.0, halve until
/// f(x - t g) <= f(x) - 1e-4 t |g|^2. Stops after max_iterations, when an
/// accepted step improves f by less than tol, or when backtracking fails.
class ArmijoDescent : public LocalOptimizer {
 public:
  ArmijoDescent(int max_iterations, double tol) : max_iterations_(max_iterations), tol_(tol) {}
  LocalRun run(const Objective& objective, std::vector<double> x0) const override;

  static constexpr double kInitialStep = 1.0;
  static constexpr double kShrink = 0.5;
  static constexpr double kSufficientDecrease = 1e-4;
  static constexpr int kMaxBacktracks = 60;

 private:
  int max_iterations_;
  double tol_;
};

/// Starting points for `restarts` runs: #1 is `first` if given, else zeros or
/// seeded-uniform per settings.init_mode; the rest are seeded-uniform.
std::vector<std::vector<double>> initial_points(const AnsatzConfig& cfg, const VqeSettings& settings,
                                                std::uint64_t seed,
                                                const std::optional<std::vector<double>>& first);

/// Minimizes F(theta) = <x(theta)|H|x(theta)> from each starting point and
/// keeps the lowest value (ties go to the lower restart index).
VqeResult minimize_from(const AnsatzConfig& cfg, const DiagonalObservable& obs,
                        const VqeSettings& settings,
                        const std::vector<std::vector<double>>& starts, std::uint64_t seed,
                        const LocalOptimizer* optimizer = nullptr);

VqeResult minimize(const AnsatzConfig& cfg, const DiagonalObservable& obs,
                   const VqeSettings& settings, std::uint64_t seed,
                   const std::optional<std::vector<double>>& warm_start = std::nullopt,
                   const LocalOptimizer* optimizer = nullptr);

}  // namespace cvqe
