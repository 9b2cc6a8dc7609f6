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


#include "cvqe/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include "cvqe/error.hpp"
#include "cvqe/generator.hpp"
#include "cvqe/report_io.hpp"

namespace cvqe {

std::string to_string(BenchSuite s) {
  return s == BenchSuite::kTable1 ? "table1" : "feas30";
}

BenchSuite bench_suite_from_string(const std::string& name) {
  if (name == "table1") return BenchSuite::kTable1;
  if (name == "feas30") return BenchSuite::kFeas30;
  throw Error(ErrorCode::kInvalidArgument, "unknown bench suite '" + name + "'");
}

int BenchSpec::qubits() const { return suite == BenchSuite::kTable1 ? 2 : 5; }
int BenchSpec::constraints() const { return suite == BenchSuite::kTable1 ? 1 : 3; }
int BenchSpec::instances() const {
  if (count) return *count;
  return suite == BenchSuite::kTable1 ? 4 : 30;
}

BenchRow bench_instance(const BenchSpec& spec, int index) {
  const auto t0 = std::chrono::steady_clock::now();
  BenchRow row;
  row.index = index;
  row.seed = spec.seed + static_cast<std::uint64_t>(index);
  row.instance = gen_instance(spec.qubits(), spec.constraints(), row.seed, true);
  row.lp = lp_solve(row.instance);
  row.brute = brute_force_solve(row.instance);
  row.quantum = solve(row.instance, spec.vqe, spec.dual, row.seed);

  const auto& q = row.quantum;
  for (std::size_t k = 0; k < q.pmf.size() && k < row.lp.pmf.size(); ++k) {
    row.pmf_distance = std::max(row.pmf_distance, std::abs(q.pmf[k] - row.lp.pmf[k]));
  }
  for (std::size_t m = 0; m < q.lambda.size() && m < row.lp.duals.size(); ++m) {
    row.dual_distance = std::max(row.dual_distance, std::abs(q.lambda[m] - row.lp.duals[m]));
  }
  row.objective_gap = q.objective - row.lp.objective;
  row.max_violation = -std::numeric_limits<double>::infinity();
  for (double f : q.constraint_values) row.max_violation = std::max(row.max_violation, f);
  row.expectation_feasible = row.max_violation <= kViolationTolerance;
  row.stochastic_optimal = row.lp.status == LpStatus::kOptimal && row.expectation_feasible &&
                           std::abs(row.objective_gap) <= kObjectiveTolerance;
  row.mode_feasible = q.mode_deterministic_feasible;
  row.mode_optimal = row.brute.best.has_value() && *row.brute.best == q.mode_bitstring;
  row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return row;
}

BenchResult run_bench(const BenchSpec& spec) {
  spec.vqe.validate();
  spec.dual.validate();
  if (spec.instances() < 1) throw Error(ErrorCode::kInvalidArgument, "bench needs at least one instance");
  BenchResult result;
  result.spec = spec;
  for (int i = 0; i < spec.instances(); ++i) {
    result.rows.push_back(bench_instance(spec, i));
    const auto& r = result.rows.back();
    result.stochastic_optimal_count += r.stochastic_optimal;
    result.mode_feasible_count += r.mode_feasible;
    result.mode_optimal_count += r.mode_optimal;
    result.converged_count += r.quantum.converged;
  }
  return result;
}

namespace {

std::string vec_g6(const std::vector<double>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += format_g6(v[i]);
  }
  return s;
}

std::string vec_fixed3(const std::vector<double>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%s%.3f", i ? ", " : "", v[i]);
    s += buf;
  }
  return s + "]";
}

const char* yn(bool b) { return b ? "yes" : "no"; }

std::string header_lines(const BenchResult& r) {
  const auto& s = r.spec;
  std::string h = "# Bench suite " + to_string(s.suite) + "\n\n";
  h += "Instances: " + std::to_string(s.instances()) + " x (" + std::to_string(s.qubits()) + " bits, " +
       std::to_string(s.constraints()) + " constraints), seeds " + std::to_string(s.seed) + ".." +
       std::to_string(s.seed + static_cast<std::uint64_t>(s.instances()) - 1) +
       ", generated with the active-constraint adjustment.\n";
  h += "No reference instances exist for this suite; every row is judged against the LP and brute-force oracles.\n";
  h += "Dual loop: mu0=" + format_g6(s.dual.mu0) + " alpha=" + format_g6(s.dual.alpha) + " tol=" +
       format_g6(s.dual.tol) + " max_outer=" + std::to_string(s.dual.max_outer) + " inner_start=" +
       to_string(s.dual.inner_start) + "; inner: restarts=" + std::to_string(s.vqe.restarts) +
       " max_iterations=" + std::to_string(s.vqe.max_iterations) + " gradient=" + to_string(s.vqe.gradient_mode) +
       "\n\n";
  return h;
}

}  // namespace

std::string bench_markdown(const BenchResult& r) {
  std::string out = header_lines(r);
  if (r.spec.suite == BenchSuite::kTable1) {
    out += "| # | seed | Found PMF | Exact PMF | Found dual | Exact dual | PMF dist | dual dist | converged |\n";
    out += "|---|------|-----------|-----------|------------|------------|----------|-----------|-----------|\n";
    for (const auto& row : r.rows) {
      out += "| " + std::to_string(row.index) + " | " + std::to_string(row.seed) + " | " +
             vec_fixed3(row.quantum.pmf) + " | " + vec_fixed3(row.lp.pmf) + " | " +
             vec_g6(row.quantum.lambda, ", ") + " | " + vec_g6(row.lp.duals, ", ") + " | " +
             format_g6(row.pmf_distance) + " | " + format_g6(row.dual_distance) + " | " +
             yn(row.quantum.converged) + " |\n";
    }
  } else {
    out += "| # | seed | LP objective | objective | max F_m | stochastic-optimal | expectation-feasible | "
           "mode feasible | mode optimal | outer iters |\n";
    out += "|---|------|--------------|-----------|---------|--------------------|----------------------|"
           "---------------|--------------|-------------|\n";
    for (const auto& row : r.rows) {
      out += "| " + std::to_string(row.index) + " | " + std::to_string(row.seed) + " | " +
             format_g6(row.lp.objective) + " | " + format_g6(row.quantum.objective) + " | " +
             format_g6(row.max_violation) + " | " + yn(row.stochastic_optimal) + " | " +
             yn(row.expectation_feasible) + " | " + yn(row.mode_feasible) + " | " + yn(row.mode_optimal) +
             " | " + std::to_string(row.quantum.trace.size()) + " |\n";
    }
  }
  const int total = static_cast<int>(r.rows.size());
  out += "\nStochastic-optimal: " + std::to_string(r.stochastic_optimal_count) + "/" + std::to_string(total) +
         " (objective within " + format_g6(kObjectiveTolerance) + " of LP, all F_m <= " +
         format_g6(kViolationTolerance) + ")\n";
  out += "Mode feasible: " + std::to_string(r.mode_feasible_count) + "/" + std::to_string(total) + "\n";
  out += "Mode optimal: " + std::to_string(r.mode_optimal_count) + "/" + std::to_string(total) + "\n";
  out += "Converged: " + std::to_string(r.converged_count) + "/" + std::to_string(total) + "\n";
  return out;
}

std::string bench_csv(const BenchResult& r) {
  std::string out;
  if (r.spec.suite == BenchSuite::kTable1) {
    out = "index,seed,quantum_pmf,lp_pmf,quantum_dual,lp_dual,pmf_distance,dual_distance,converged\n";
    for (const auto& row : r.rows) {
      out += std::to_string(row.index) + "," + std::to_string(row.seed) + "," + vec_g6(row.quantum.pmf, ";") + "," +
             vec_g6(row.lp.pmf, ";") + "," + vec_g6(row.quantum.lambda, ";") + "," + vec_g6(row.lp.duals, ";") +
             "," + format_g6(row.pmf_distance) + "," + format_g6(row.dual_distance) + "," +
             std::to_string(row.quantum.converged ? 1 : 0) + "\n";
    }
  } else {
    out = "index,seed,lp_objective,objective,max_violation,stochastic_optimal,expectation_feasible,"
          "mode_feasible,mode_optimal,converged,outer_iterations\n";
    for (const auto& row : r.rows) {
      out += std::to_string(row.index) + "," + std::to_string(row.seed) + "," + format_g6(row.lp.objective) +
             "," + format_g6(row.quantum.objective) + "," + format_g6(row.max_violation) + "," +
             std::to_string(row.stochastic_optimal ? 1 : 0) + "," + std::to_string(row.expectation_feasible ? 1 : 0) +
             "," + std::to_string(row.mode_feasible ? 1 : 0) + "," + std::to_string(row.mode_optimal ? 1 : 0) + "," +
             std::to_string(row.quantum.converged ? 1 : 0) + "," + std::to_string(row.quantum.trace.size()) + "\n";
    }
  }
  return out;
}

}  // namespace cvqe
