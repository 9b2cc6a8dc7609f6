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

#include <optional>
#include <string>
#include <vector>

#include "cvqe/problem.hpp"
#include "cvqe/statevector.hpp"

namespace cvqe {

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

std::string to_string(LpStatus status);

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<double> pmf;    // empty unless optimal
  double objective = 0.0;
  std::vector<double> duals;  // lambda_m >= 0 for the M expectation rows
  /// Value of the dual program, min_k [f_0(k) + sum_m duals_m f_m(k)].
  double dual_objective = 0.0;
  int pivots = 0;
};

/// Exact reference for the expectation-constrained problem over outcome PMFs:
///   min_p  sum_k p_k f_0(k)
///   s.t.   sum_k p_k f_m(k) <= 0,  m = 1..M
///          sum_k p_k = 1,  p >= 0.
/// Dense two-phase tableau simplex with Bland's rule.
LpSolution lp_solve(const QcqpInstance& inst, int max_qubits = 12);

/// Same LP from precomputed diagonals (objective first, then constraints).
LpSolution lp_solve_diagonals(const std::vector<DiagonalObservable>& diagonals);

struct BruteForceSolution {
  std::optional<BitVector> best;
  std::optional<double> best_value;
  long long feasible_count = 0;
};

/// Enumerates every bitstring; ties in f_0 go to the lowest index.
BruteForceSolution brute_force_solve(const QcqpInstance& inst, int max_qubits = kDefaultMaxQubits);

/// True iff some PMF satisfies every constraint in expectation.
bool stochastic_feasible(const QcqpInstance& inst);

}  // namespace cvqe
