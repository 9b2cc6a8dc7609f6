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
#include <span>
#include <string>
#include <vector>

#include "cvqe/problem.hpp"
#include "cvqe/statevector.hpp"
#include "cvqe/vqe.hpp"

namespace cvqe {

/// Projected-subgradient multiplier state. Step t uses mu0 / (t + alpha).
struct DualState {
  std::vector<double> lambda;
  int t = 0;
  double mu0 = 1.0;
  double alpha = 1.0;

  double step_size() const { return mu0 / (t + alpha); }
};

/// lambda_m <- max(lambda_m + mu_t F_m, 0); t <- t + 1.
DualState dual_step(const DualState& state, std::span<const double> constraint_values);

/// diag(H_0) + sum_m lambda_m diag(H_m).
DiagonalObservable lagrangian_observable(const QcqpInstance& inst, std::span<const double> lambda);
DiagonalObservable lagrangian_observable(const std::vector<DiagonalObservable>& diagonals,
                                         std::span<const double> lambda);

/// How each outer iteration seeds its inner VQE solve.
enum class InnerStart {
  /// Previous iterate's theta as restart #1, fresh seeded points after it.
  kWarm,
  /// The same seeded starting set every iteration, so the primal iterate is
  /// a deterministic function of lambda.
  kFixed,
};

std::string to_string(InnerStart s);
InnerStart inner_start_from_string(const std::string& name);

struct DualConfig {
  double mu0 = 1.0;
  double alpha = 1.0;
  double tol = 1e-5;
  int max_outer = 500;
  InnerStart inner_start = InnerStart::kFixed;
  /// 0 = exact constraint expectations in the dual update; otherwise sample
  /// averages over this many shots.
  int shots = 0;

  void validate() const;
};

/// Inner-solve settings used by the dual loop unless overridden: one seeded
/// uniform start run for the full iteration budget. (theta = 0 is a basis
/// state and therefore a stationary point of every diagonal energy.)
VqeSettings default_inner_settings();

struct TraceRow {
  int iter = 0;                   // 1-based outer iteration
  std::vector<double> lambda;     // multipliers after this iteration's update
  double objective = 0.0;         // F_0 at this iteration's primal iterate
  std::vector<double> constraint_values;
  long long inner_evaluations = 0;
};

struct SolveReport {
  int n = 0;
  std::vector<double> pmf;
  std::vector<double> theta;
  std::vector<double> lambda;
  double objective = 0.0;
  std::vector<double> constraint_values;
  std::vector<TraceRow> trace;
  bool converged = false;
  BitVector mode_bitstring;
  bool mode_deterministic_feasible = false;
};

/// Dual decomposition: alternate a VQE solve of the Lagrangian at lambda^t
/// with a projected subgradient step on lambda, until
/// ||lambda^t - lambda^{t-1}||_2 <= tol or max_outer iterations.
SolveReport solve(const QcqpInstance& inst, const AnsatzConfig& ansatz, const VqeSettings& vqe,
                  const DualConfig& dual, std::uint64_t seed);

/// Same loop with the default ansatz (3 layers, final rotation, full CX).
SolveReport solve(const QcqpInstance& inst, const VqeSettings& vqe, const DualConfig& dual,
                  std::uint64_t seed);

}  // namespace cvqe
