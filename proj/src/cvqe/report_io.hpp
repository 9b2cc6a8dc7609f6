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


// Report documents shared by the quantum solver and both oracles, plus the
// per-iteration trace CSV.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cvqe/dual.hpp"
#include "cvqe/oracles.hpp"
#include "cvqe/problem.hpp"

namespace cvqe {

struct ReportDocument {
  std::string solver;  // "quantum", "lp" or "brute"
  std::string status;  // "converged", "not-converged", "optimal", "infeasible", "unbounded"
  int n = 0;
  std::vector<double> pmf;  // empty when there is no solution
  std::vector<double> lambda;
  double objective = 0.0;
  std::vector<double> constraint_values;
  bool converged = false;
  std::optional<BitVector> mode_bitstring;
  bool mode_deterministic_feasible = false;
  std::vector<double> theta;
  int outer_iterations = 0;
  std::optional<long long> feasible_count;

  bool operator==(const ReportDocument&) const = default;
};

ReportDocument report_from_solve(const SolveReport& rep);
ReportDocument report_from_lp(const QcqpInstance& inst, const LpSolution& lp);
ReportDocument report_from_brute(const QcqpInstance& inst, const BruteForceSolution& bf);

std::string serialize_report(const ReportDocument& rep);
ReportDocument parse_report(const std::string& text);

std::string bitstring(const BitVector& b);

/// Six significant digits, shortest form.
std::string format_g6(double v);

std::string trace_csv(const std::vector<TraceRow>& trace, int num_constraints);

}  // namespace cvqe
