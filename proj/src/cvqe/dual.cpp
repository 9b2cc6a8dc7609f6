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

#include "cvqe/dual.hpp"

#include <algorithm>
#include <cmath>

#include "cvqe/error.hpp"
#include "cvqe/rng.hpp"

namespace cvqe {

DualState dual_step(const DualState& state, std::span<const double> constraint_values) {
  if (constraint_values.size() != state.lambda.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "constraint values and multipliers differ in length");
  }
  DualState next = state;
  const double mu = state.step_size();
  for (std::size_t m = 0; m < next.lambda.size(); ++m) {
    next.lambda[m] = std::max(state.lambda[m] + mu * constraint_values[m], 0.0);
  }
  next.t = state.t + 1;
  return next;
}

DiagonalObservable lagrangian_observable(const std::vector<DiagonalObservable>& diagonals,
                                         std::span<const double> lambda) {
  if (lambda.size() + 1 != diagonals.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "need one multiplier per constraint");
  }
  for (double l : lambda) {
    if (!(l >= 0.0)) throw Error(ErrorCode::kInvalidArgument, "multipliers must be nonnegative");
  }
  std::vector<double> values = diagonals.front().values();
  for (std::size_t m = 0; m < lambda.size(); ++m) {
    if (lambda[m] == 0.0) continue;
    const auto& h = diagonals[m + 1].values();
    for (std::size_t k = 0; k < values.size(); ++k) values[k] += lambda[m] * h[k];
  }
  return DiagonalObservable(diagonals.front().n(), std::move(values));
}

DiagonalObservable lagrangian_observable(const QcqpInstance& inst, std::span<const double> lambda) {
  std::vector<DiagonalObservable> diagonals;
  diagonals.push_back(diagonal_of(inst.objective()));
  for (const auto& f : inst.constraints()) diagonals.push_back(diagonal_of(f));
  return lagrangian_observable(diagonals, lambda);
}

std::string to_string(InnerStart s) {
  switch (s) {
    case InnerStart::kWarm:
      return "warm";
    case InnerStart::kFixed:
      return "fixed";
  }
  return "unknown";
}

InnerStart inner_start_from_string(const std::string& name) {
  if (name == "warm") return InnerStart::kWarm;
  if (name == "fixed") return InnerStart::kFixed;
  throw Error(ErrorCode::kInvalidArgument, "unknown inner start '" + name + "'");
}

void DualConfig::validate() const {
  if (!(mu0 > 0.0)) throw Error(ErrorCode::kInvalidArgument, "mu0 must be > 0");
  if (!(alpha > 0.0)) throw Error(ErrorCode::kInvalidArgument, "alpha must be > 0");
  if (!(tol >= 0.0)) throw Error(ErrorCode::kInvalidArgument, "tol must be >= 0");
  if (max_outer < 1) throw Error(ErrorCode::kInvalidArgument, "max_outer must be >= 1");
  if (shots < 0) throw Error(ErrorCode::kInvalidArgument, "shots must be >= 0");
}

VqeSettings default_inner_settings() {
  VqeSettings s;
  s.restarts = 1;
  s.convergence_tol = 0.0;
  s.init_mode = InitMode::kSeededUniform;
  return s;
}

namespace {

double pmf_average(std::span<const double> pmf, std::span<const double> values) {
  double e = 0.0;
  for (std::size_t k = 0; k < pmf.size(); ++k) e += pmf[k] * values[k];
  return e;
}

}  // namespace

SolveReport solve(const QcqpInstance& inst, const AnsatzConfig& ansatz, const VqeSettings& vqe,
                  const DualConfig& dual, std::uint64_t seed) {
  vqe.validate();
  dual.validate();
  if (ansatz.n != inst.n()) throw Error(ErrorCode::kDimensionMismatch, "ansatz and instance differ in n");
  const int m_count = inst.num_constraints();

  std::vector<DiagonalObservable> diagonals;
  diagonals.push_back(diagonal_of(inst.objective()));
  for (const auto& f : inst.constraints()) diagonals.push_back(diagonal_of(f));

  DualState state;
  state.lambda.assign(static_cast<std::size_t>(m_count), 0.0);
  state.mu0 = dual.mu0;
  state.alpha = dual.alpha;

  const auto fixed_starts = initial_points(ansatz, vqe, derive_seed(seed, 0), std::nullopt);

  SolveReport report;
  report.n = inst.n();
  std::vector<double> theta;
  for (int outer = 0; outer < dual.max_outer; ++outer) {
    const auto obs = lagrangian_observable(diagonals, state.lambda);
    const std::uint64_t inner_seed = derive_seed(seed, static_cast<std::uint64_t>(outer) + 1);
    VqeResult inner;
    if (dual.inner_start == InnerStart::kFixed || outer == 0) {
      inner = minimize_from(ansatz, obs, vqe, fixed_starts, inner_seed);
    } else {
      inner = minimize(ansatz, obs, vqe, inner_seed, theta);
    }
    theta = inner.theta_star;

    TraceRow row;
    row.iter = outer + 1;
    row.objective = pmf_average(inner.pmf, diagonals[0].values());
    row.constraint_values.resize(static_cast<std::size_t>(m_count));
    std::vector<double> dual_values(static_cast<std::size_t>(m_count));
    for (int m = 0; m < m_count; ++m) {
      const auto& h = diagonals[static_cast<std::size_t>(m) + 1].values();
      row.constraint_values[static_cast<std::size_t>(m)] = pmf_average(inner.pmf, h);
      if (dual.shots > 0) {
        double sum = 0.0;
        for (auto k : sample_indices(inner.pmf, dual.shots, derive_seed(inner_seed, static_cast<std::uint64_t>(m) + 1)))
          sum += h[k];
        dual_values[static_cast<std::size_t>(m)] = sum / dual.shots;
      } else {
        dual_values[static_cast<std::size_t>(m)] = row.constraint_values[static_cast<std::size_t>(m)];
      }
    }
    row.inner_evaluations = inner.evaluations;

    const DualState next = dual_step(state, dual_values);
    double change = 0.0;
    for (std::size_t m = 0; m < next.lambda.size(); ++m) {
      const double diff = next.lambda[m] - state.lambda[m];
      change += diff * diff;
    }
    change = std::sqrt(change);
    state = next;
    row.lambda = state.lambda;

    report.pmf = inner.pmf;
    report.objective = row.objective;
    report.constraint_values = row.constraint_values;
    report.trace.push_back(std::move(row));
    if (change <= dual.tol) {
      report.converged = true;
      break;
    }
  }

  report.theta = theta;
  report.lambda = state.lambda;
  const auto mode = static_cast<std::uint64_t>(
      std::max_element(report.pmf.begin(), report.pmf.end()) - report.pmf.begin());
  report.mode_bitstring = BitVector::from_index(mode, inst.n());
  report.mode_deterministic_feasible = true;
  for (const auto& f : inst.constraints()) {
    if (eval_quadratic_at(f, mode) > 0.0) report.mode_deterministic_feasible = false;
  }
  return report;
}

SolveReport solve(const QcqpInstance& inst, const VqeSettings& vqe, const DualConfig& dual,
                  std::uint64_t seed) {
  AnsatzConfig ansatz;
  ansatz.n = inst.n();
  return solve(inst, ansatz, vqe, dual, seed);
}

}  // namespace cvqe
