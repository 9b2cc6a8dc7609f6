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


#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "cvqe/dual.hpp"
#include "cvqe/error.hpp"
#include "cvqe/generator.hpp"
#include "cvqe/oracles.hpp"
#include "reference.hpp"

namespace cvqe {
namespace {

TEST(DualStep, Examples) {
  DualState s{.lambda = {0.0}, .t = 0};
  auto n = dual_step(s, std::vector<double>{-0.3});
  EXPECT_EQ(n.lambda[0], 0.0);
  EXPECT_EQ(n.t, 1);

  // mu_t = 1 / (9 + 1) = 0.1
  s = DualState{.lambda = {0.5}, .t = 9};
  EXPECT_NEAR(dual_step(s, std::vector<double>{0.2}).lambda[0], 0.52, 1e-15);

  s = DualState{.lambda = {0.1}, .t = 0};
  EXPECT_EQ(dual_step(s, std::vector<double>{-0.5}).lambda[0], 0.0);
}

TEST(DualStep, StepSchedule) {
  DualState s{.lambda = {}, .t = 3, .mu0 = 2.0, .alpha = 0.5};
  EXPECT_DOUBLE_EQ(s.step_size(), 2.0 / 3.5);
  EXPECT_THROW(dual_step(s, std::vector<double>{1.0}), Error);
}

TEST(Lagrangian, PerIndexArithmetic) {
  std::mt19937_64 gen(5);
  QcqpInstance inst(testing::random_form(2, gen), {testing::random_form(2, gen)});
  std::vector<double> lambda{0.5};
  auto obs = lagrangian_observable(inst, lambda);
  for (std::uint64_t k = 0; k < 4; ++k) {
    const double ref = testing::naive_eval_index(inst.objective(), k) +
                       0.5 * testing::naive_eval_index(inst.constraint(0), k);
    EXPECT_NEAR(obs.values()[k], ref, 1e-12);
  }
}

TEST(Lagrangian, ZeroAndLinearity) {
  std::mt19937_64 gen(6);
  QcqpInstance inst(testing::random_form(3, gen), {testing::random_form(3, gen), testing::random_form(3, gen)});
  auto o0 = lagrangian_observable(inst, std::vector<double>{0, 0});
  EXPECT_EQ(o0.values(), diagonal_of(inst.objective()).values());
  auto o1 = lagrangian_observable(inst, std::vector<double>{0.3, 1.1});
  auto o2 = lagrangian_observable(inst, std::vector<double>{0.6, 2.2});
  for (std::size_t k = 0; k < 8; ++k) {
    EXPECT_NEAR(o2.values()[k] - o1.values()[k], o1.values()[k] - o0.values()[k], 1e-12);
  }
}

TEST(Lagrangian, RejectsNegativeOrMisSized) {
  QcqpInstance inst(QuadraticForm::zero(2), {QuadraticForm::zero(2)});
  EXPECT_THROW(lagrangian_observable(inst, std::vector<double>{-0.1}), Error);
  EXPECT_THROW(lagrangian_observable(inst, std::vector<double>{0.1, 0.2}), Error);
}

TEST(Solve, NoConstraintsIsSingleVqe) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto inst = gen_instance(3, 0, seed, false);
    auto rep = solve(inst, VqeSettings{}, DualConfig{}, seed);
    auto bf = brute_force_solve(inst);
    EXPECT_NEAR(rep.objective, *bf.best_value, 1e-4);
    EXPECT_TRUE(rep.converged);
    EXPECT_EQ(rep.trace.size(), 1U);
    EXPECT_TRUE(rep.lambda.empty());
  }
}

TEST(Solve, NeverActiveConstraintStopsQuickly) {
  std::mt19937_64 gen(7);
  QcqpInstance inst(testing::random_form(2, gen), {QuadraticForm::constant(2, -1.0)});
  auto rep = solve(inst, default_inner_settings(), DualConfig{}, 3);
  EXPECT_TRUE(rep.converged);
  EXPECT_LE(rep.trace.size(), 2U);
  EXPECT_EQ(rep.lambda[0], 0.0);
}

TEST(Solve, ReportIsConsistent) {
  auto inst = gen_instance(3, 2, 12, true);
  DualConfig cfg;
  cfg.max_outer = 40;
  auto rep = solve(inst, default_inner_settings(), cfg, 12);
  double total = 0.0;
  for (double p : rep.pmf) total += p;
  EXPECT_NEAR(total, 1.0, 1e-9);
  double f0 = 0.0;
  for (std::uint64_t k = 0; k < rep.pmf.size(); ++k) f0 += rep.pmf[k] * testing::naive_eval_index(inst.objective(), k);
  EXPECT_NEAR(rep.objective, f0, 1e-9);
  for (int m = 0; m < 2; ++m) {
    double fm = 0.0;
    for (std::uint64_t k = 0; k < rep.pmf.size(); ++k) fm += rep.pmf[k] * testing::naive_eval_index(inst.constraint(m), k);
    EXPECT_NEAR(rep.constraint_values[static_cast<std::size_t>(m)], fm, 1e-9);
  }
  ASSERT_FALSE(rep.trace.empty());
  for (std::size_t i = 0; i < rep.trace.size(); ++i) {
    EXPECT_EQ(rep.trace[i].iter, static_cast<int>(i) + 1);
    for (double l : rep.trace[i].lambda) EXPECT_GE(l, 0.0);
    EXPECT_GT(rep.trace[i].inner_evaluations, 0);
  }
  EXPECT_EQ(rep.lambda, rep.trace.back().lambda);
  const auto mode = static_cast<std::uint64_t>(std::max_element(rep.pmf.begin(), rep.pmf.end()) - rep.pmf.begin());
  EXPECT_EQ(rep.mode_bitstring.index(), mode);
}

TEST(Solve, MaxOuterTruncates) {
  auto inst = gen_instance(2, 1, 4, true);
  DualConfig cfg;
  cfg.max_outer = 1;
  auto rep = solve(inst, default_inner_settings(), cfg, 4);
  EXPECT_FALSE(rep.converged);
  EXPECT_EQ(rep.trace.size(), 1U);
}

TEST(Solve, Deterministic) {
  auto inst = gen_instance(2, 1, 9, true);
  DualConfig cfg;
  cfg.max_outer = 60;
  auto a = solve(inst, default_inner_settings(), cfg, 9);
  auto b = solve(inst, default_inner_settings(), cfg, 9);
  EXPECT_EQ(a.pmf, b.pmf);
  EXPECT_EQ(a.lambda, b.lambda);
  EXPECT_EQ(a.trace.size(), b.trace.size());
}

TEST(Solve, ShotBasedDualUpdateStaysNonnegative) {
  auto inst = gen_instance(2, 1, 2, true);
  DualConfig cfg;
  cfg.max_outer = 30;
  cfg.shots = 200;
  auto rep = solve(inst, default_inner_settings(), cfg, 2);
  for (const auto& row : rep.trace) EXPECT_GE(row.lambda[0], 0.0);
}

TEST(DualConfig, Validation) {
  DualConfig c;
  c.mu0 = 0;
  EXPECT_THROW(c.validate(), Error);
  c = DualConfig{};
  c.max_outer = 0;
  EXPECT_THROW(c.validate(), Error);
  EXPECT_EQ(inner_start_from_string(to_string(InnerStart::kWarm)), InnerStart::kWarm);
  EXPECT_THROW(inner_start_from_string("cold"), Error);
}

}  // namespace
}  // namespace cvqe
