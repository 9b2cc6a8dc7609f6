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

#include "cvqe/generator.hpp"

#include <algorithm>
#include <limits>

#include "cvqe/error.hpp"
#include "cvqe/oracles.hpp"
#include "cvqe/rng.hpp"

namespace cvqe {

namespace {

QuadraticForm draw_form(int n, Rng& rng) {
  const auto nn = static_cast<std::size_t>(n);
  std::vector<double> a(nn * nn), c(nn);
  for (auto& x : a) x = rng.normal();
  for (auto& x : c) x = rng.normal();
  const double d = rng.normal();
  return QuadraticForm(n, std::move(a), std::move(c), d);
}

std::uint64_t argmin_index(const QuadraticForm& f) {
  const std::uint64_t count = std::uint64_t{1} << f.n();
  std::uint64_t best = 0;
  double best_value = std::numeric_limits<double>::infinity();
  for (std::uint64_t k = 0; k < count; ++k) {
    const double v = eval_quadratic_at(f, k);
    if (v < best_value) {
      best_value = v;
      best = k;
    }
  }
  return best;
}

double min_value(const QuadraticForm& f) { return eval_quadratic_at(f, argmin_index(f)); }

bool has_binding_constraint(const LpSolution& lp) {
  return std::any_of(lp.duals.begin(), lp.duals.end(),
                     [](double l) { return l > kActiveDualThreshold; });
}

}  // namespace

QcqpInstance gen_instance(int n, int m, std::uint64_t seed, bool ensure_active) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "n must be >= 1");
  if (m < 0) throw Error(ErrorCode::kInvalidArgument, "M must be >= 0");
  if (n > 12) throw Error(ErrorCode::kLimitExceeded, "generator checks use the LP oracle; n must be <= 12");
  Rng rng(seed);
  for (int attempt = 0; attempt < kGeneratorAttempts; ++attempt) {
    QuadraticForm objective = draw_form(n, rng);
    std::vector<QuadraticForm> constraints;
    for (int i = 0; i < m; ++i) constraints.push_back(draw_form(n, rng));
    QcqpInstance inst(objective, constraints);

    LpSolution lp = lp_solve(inst);
    if (lp.status != LpStatus::kOptimal) continue;
    if (!ensure_active || m == 0) return inst;
    if (has_binding_constraint(lp)) return inst;

    const std::uint64_t b_star = argmin_index(objective);
    bool adjusted = false;
    for (int i = 0; i < m; ++i) {
      auto& f = constraints[static_cast<std::size_t>(i)];
      const double at_star = eval_quadratic_at(f, b_star);
      if (min_value(f) < at_star - kActiveMargin) {
        f = f.shifted(kActiveMargin - at_star);
        adjusted = true;
        break;
      }
    }
    if (!adjusted) continue;
    inst = QcqpInstance(objective, constraints);
    lp = lp_solve(inst);
    if (lp.status == LpStatus::kOptimal && has_binding_constraint(lp)) return inst;
  }
  throw Error(ErrorCode::kGenerationFailed,
              "no feasible instance within " + std::to_string(kGeneratorAttempts) + " draws");
}

}  // namespace cvqe
