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

#include "cvqe/oracles.hpp"

#include <cmath>
#include <limits>

#include "cvqe/error.hpp"

namespace cvqe {

std::string to_string(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
  }
  return "unknown";
}

namespace {

constexpr double kPivotEps = 1e-11;
constexpr double kCostEps = 1e-11;

// Standard-form tableau for min c'x, Ax = b, x >= 0, b >= 0.
//
// Columns: N probability variables, M slacks, one artificial for the
// normalization row. Rows 0..M-1 are the expectation constraints (rhs 0, so
// their slacks start basic at level zero); row M is sum_k p_k = 1 with the
// artificial basic.
class Tableau {
 public:
  Tableau(const std::vector<DiagonalObservable>& diagonals)
      : n_vars_(diagonals.front().values().size()),
        rows_(diagonals.size()),
        cols_(n_vars_ + (rows_ - 1) + 1),
        t_(rows_ * (cols_ + 1), 0.0),
        basis_(rows_) {
    const std::size_t m_count = rows_ - 1;
    for (std::size_t m = 0; m < m_count; ++m) {
      const auto& v = diagonals[m + 1].values();
      for (std::size_t k = 0; k < n_vars_; ++k) at(m, k) = v[k];
      at(m, n_vars_ + m) = 1.0;
      basis_[m] = n_vars_ + m;
    }
    for (std::size_t k = 0; k < n_vars_; ++k) at(m_count, k) = 1.0;
    at(m_count, artificial()) = 1.0;
    rhs(m_count) = 1.0;
    basis_[m_count] = artificial();
  }

  std::size_t artificial() const { return cols_ - 1; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t n_vars() const { return n_vars_; }
  const std::vector<std::size_t>& basis() const { return basis_; }

  double& at(std::size_t r, std::size_t c) { return t_[r * (cols_ + 1) + c]; }
  double at(std::size_t r, std::size_t c) const { return t_[r * (cols_ + 1) + c]; }
  double& rhs(std::size_t r) { return t_[r * (cols_ + 1) + cols_]; }
  double rhs(std::size_t r) const { return t_[r * (cols_ + 1) + cols_]; }

  // Reduced costs d_j = c_j - c_B' B^-1 A_j for the given column costs.
  std::vector<double> reduced_costs(const std::vector<double>& cost) const {
    std::vector<double> d(cost);
    for (std::size_t r = 0; r < rows_; ++r) {
      const double cb = cost[basis_[r]];
      if (cb == 0.0) continue;
      for (std::size_t c = 0; c < cols_; ++c) d[c] -= cb * at(r, c);
    }
    return d;
  }

  void pivot(std::size_t pr, std::size_t pc) {
    const double inv = 1.0 / at(pr, pc);
    for (std::size_t c = 0; c <= cols_; ++c) t_[pr * (cols_ + 1) + c] *= inv;
    at(pr, pc) = 1.0;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == pr) continue;
      const double f = at(r, pc);
      if (f == 0.0) continue;
      for (std::size_t c = 0; c <= cols_; ++c) t_[r * (cols_ + 1) + c] -= f * t_[pr * (cols_ + 1) + c];
      at(r, pc) = 0.0;
    }
    basis_[pr] = pc;
  }

  // Bland's rule: entering = lowest-index column with negative reduced cost
  // among `allowed`; leaving = minimum ratio, ties to the lowest basic index.
  // Returns false on optimality; sets `unbounded` if no leaving row exists.
  bool step(const std::vector<double>& cost, const std::vector<bool>& allowed, bool& unbounded) {
    const auto d = reduced_costs(cost);
    std::size_t enter = cols_;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (allowed[c] && d[c] < -kCostEps) {
        enter = c;
        break;
      }
    }
    if (enter == cols_) return false;
    std::size_t leave = rows_;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < rows_; ++r) {
      const double a = at(r, enter);
      if (a <= kPivotEps) continue;
      const double ratio = rhs(r) / a;
      if (ratio < best_ratio - 1e-15 ||
          (std::abs(ratio - best_ratio) <= 1e-15 && basis_[r] < basis_[leave])) {
        best_ratio = ratio;
        leave = r;
      }
    }
    if (leave == rows_) {
      unbounded = true;
      return false;
    }
    pivot(leave, enter);
    return true;
  }

 private:
  std::size_t n_vars_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> t_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LpSolution lp_solve_diagonals(const std::vector<DiagonalObservable>& diagonals) {
  if (diagonals.empty()) throw Error(ErrorCode::kInvalidArgument, "LP needs an objective diagonal");
  for (const auto& d : diagonals) {
    if (d.n() != diagonals.front().n()) {
      throw Error(ErrorCode::kDimensionMismatch, "LP diagonals differ in qubit count");
    }
  }
  Tableau tab(diagonals);
  const std::size_t m_count = diagonals.size() - 1;
  LpSolution sol;

  // Phase 1: drive the artificial out of the basis.
  std::vector<double> cost1(tab.cols(), 0.0);
  cost1[tab.artificial()] = 1.0;
  std::vector<bool> allowed(tab.cols(), true);
  bool unbounded = false;
  while (tab.step(cost1, allowed, unbounded)) ++sol.pivots;
  double infeasibility = 0.0;
  for (std::size_t r = 0; r < tab.rows(); ++r) {
    if (tab.basis()[r] == tab.artificial()) infeasibility += tab.rhs(r);
  }
  if (infeasibility > 1e-9) {
    sol.status = LpStatus::kInfeasible;
    return sol;
  }
  // A degenerate artificial still basic at level zero is pivoted out on the
  // first usable column.
  for (std::size_t r = 0; r < tab.rows(); ++r) {
    if (tab.basis()[r] != tab.artificial()) continue;
    for (std::size_t c = 0; c < tab.artificial(); ++c) {
      if (std::abs(tab.at(r, c)) > kPivotEps) {
        tab.pivot(r, c);
        ++sol.pivots;
        break;
      }
    }
  }

  // Phase 2 over the original costs; the artificial may not re-enter.
  std::vector<double> cost2(tab.cols(), 0.0);
  const auto& f0 = diagonals.front().values();
  for (std::size_t k = 0; k < tab.n_vars(); ++k) cost2[k] = f0[k];
  allowed[tab.artificial()] = false;
  unbounded = false;
  while (tab.step(cost2, allowed, unbounded)) ++sol.pivots;
  if (unbounded) {
    sol.status = LpStatus::kUnbounded;
    return sol;
  }

  sol.status = LpStatus::kOptimal;
  sol.pmf.assign(tab.n_vars(), 0.0);
  for (std::size_t r = 0; r < tab.rows(); ++r) {
    const auto b = tab.basis()[r];
    if (b < tab.n_vars()) sol.pmf[b] = std::max(0.0, tab.rhs(r));
  }
  double total = 0.0;
  for (double p : sol.pmf) total += p;
  for (double& p : sol.pmf) p /= total;
  sol.objective = 0.0;
  for (std::size_t k = 0; k < tab.n_vars(); ++k) sol.objective += sol.pmf[k] * f0[k];

  // The reduced cost of slack m is -y_m, where y is the simplex multiplier of
  // expectation row m; for a <= row in a minimization that is lambda_m >= 0.
  const auto d = tab.reduced_costs(cost2);
  sol.duals.resize(m_count);
  for (std::size_t m = 0; m < m_count; ++m) sol.duals[m] = std::max(0.0, d[tab.n_vars() + m]);

  sol.dual_objective = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < tab.n_vars(); ++k) {
    double lk = f0[k];
    for (std::size_t m = 0; m < m_count; ++m) lk += sol.duals[m] * diagonals[m + 1].values()[k];
    sol.dual_objective = std::min(sol.dual_objective, lk);
  }
  return sol;
}

LpSolution lp_solve(const QcqpInstance& inst, int max_qubits) {
  std::vector<DiagonalObservable> diagonals;
  diagonals.push_back(diagonal_of(inst.objective(), max_qubits));
  for (const auto& f : inst.constraints()) diagonals.push_back(diagonal_of(f, max_qubits));
  return lp_solve_diagonals(diagonals);
}

BruteForceSolution brute_force_solve(const QcqpInstance& inst, int max_qubits) {
  if (inst.n() > max_qubits) {
    throw Error(ErrorCode::kLimitExceeded, "n exceeds the brute-force limit");
  }
  BruteForceSolution sol;
  const std::uint64_t count = std::uint64_t{1} << inst.n();
  for (std::uint64_t k = 0; k < count; ++k) {
    bool feasible = true;
    for (const auto& f : inst.constraints()) {
      if (eval_quadratic_at(f, k) > 0.0) {
        feasible = false;
        break;
      }
    }
    if (!feasible) continue;
    ++sol.feasible_count;
    const double v = eval_quadratic_at(inst.objective(), k);
    if (!sol.best_value || v < *sol.best_value) {
      sol.best_value = v;
      sol.best = BitVector::from_index(k, inst.n());
    }
  }
  return sol;
}

bool stochastic_feasible(const QcqpInstance& inst) {
  return lp_solve(inst).status == LpStatus::kOptimal;
}

}  // namespace cvqe
