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


// Benchmark suites: "table1" compares the quantum solver with the LP oracle
// on small single-constraint instances, "feas30" counts stochastic-optimal
// solves on 5-bit, three-constraint instances.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cvqe/dual.hpp"
#include "cvqe/oracles.hpp"
#include "cvqe/problem.hpp"
#include "cvqe/vqe.hpp"

namespace cvqe {

enum class BenchSuite { kTable1, kFeas30 };

std::string to_string(BenchSuite s);
BenchSuite bench_suite_from_string(const std::string& name);

inline constexpr double kObjectiveTolerance = 1e-2;
inline constexpr double kViolationTolerance = 1e-3;

struct BenchSpec {
  BenchSuite suite = BenchSuite::kTable1;
  std::uint64_t seed = 1;
  VqeSettings vqe = default_inner_settings();
  DualConfig dual;
  /// Overrides the suite's instance count when set.
  std::optional<int> count;

  int qubits() const;
  int constraints() const;
  int instances() const;
};

struct BenchRow {
  int index = 0;
  std::uint64_t seed = 0;
  QcqpInstance instance;
  SolveReport quantum;
  LpSolution lp;
  BruteForceSolution brute;

  double pmf_distance = 0.0;   // infinity norm
  double dual_distance = 0.0;  // infinity norm
  double objective_gap = 0.0;  // quantum - LP
  double max_violation = 0.0;  // max_m F_m, or -inf for M = 0
  bool expectation_feasible = false;
  bool stochastic_optimal = false;
  bool mode_feasible = false;
  bool mode_optimal = false;
  double seconds = 0.0;
};

struct BenchResult {
  BenchSpec spec;
  std::vector<BenchRow> rows;
  int stochastic_optimal_count = 0;
  int mode_feasible_count = 0;
  int mode_optimal_count = 0;
  int converged_count = 0;
};

BenchRow bench_instance(const BenchSpec& spec, int index);
BenchResult run_bench(const BenchSpec& spec);

std::string bench_markdown(const BenchResult& result);
std::string bench_csv(const BenchResult& result);

}  // namespace cvqe
