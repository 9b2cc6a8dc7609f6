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

#include <numbers>
#include <random>

#include "cvqe/error.hpp"
#include "cvqe/vqe.hpp"
#include "reference.hpp"

namespace cvqe {
namespace {

std::vector<double> random_theta(int p, std::mt19937_64& gen) {
  std::uniform_real_distribution<double> u(-std::numbers::pi, std::numbers::pi);
  std::vector<double> t(static_cast<std::size_t>(p));
  for (auto& x : t) x = u(gen);
  return t;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

TEST(Gradient, ModesAgree) {
  std::mt19937_64 gen(31);
  for (int trial = 0; trial < 15; ++trial) {
    AnsatzConfig cfg{.n = 1 + trial % 5};
    auto obs = diagonal_of(testing::random_form(cfg.n, gen));
    auto theta = random_theta(cfg.param_count(), gen);
    auto ps = gradient(cfg, obs, theta, GradientMode::kParameterShift);
    auto fd = gradient(cfg, obs, theta, GradientMode::kFiniteDifference);
    auto adj = gradient(cfg, obs, theta, GradientMode::kAdjoint);
    EXPECT_LT(max_abs_diff(ps, fd), 1e-4);
    EXPECT_LT(max_abs_diff(ps, adj), 1e-12);
  }
}

TEST(Gradient, SingleQubitClosedForm) {
  // <Z-like diag(0, 1)> under RY(t)|0> is sin^2(t/2); derivative sin(t)/2.
  AnsatzConfig cfg{.n = 1, .layers = 0};
  DiagonalObservable obs(1, {0.0, 1.0});
  for (double t : {-2.0, 0.3, 1.7}) {
    std::vector<double> theta{t};
    for (auto mode : {GradientMode::kParameterShift, GradientMode::kAdjoint}) {
      EXPECT_NEAR(gradient(cfg, obs, theta, mode)[0], std::sin(t) / 2, 1e-12);
    }
  }
}

TEST(GradientMode, StringRoundTrip) {
  for (auto m : {GradientMode::kParameterShift, GradientMode::kFiniteDifference, GradientMode::kAdjoint}) {
    EXPECT_EQ(gradient_mode_from_string(to_string(m)), m);
  }
  EXPECT_THROW(gradient_mode_from_string("newton"), Error);
}

TEST(Minimize, ConstantObservable) {
  AnsatzConfig cfg{.n = 2};
  DiagonalObservable obs(2, {1.5, 1.5, 1.5, 1.5});
  auto r = minimize(cfg, obs, VqeSettings{}, 1);
  EXPECT_NEAR(r.value, 1.5, 1e-12);
}

TEST(Minimize, SingleBitLinear) {
  AnsatzConfig cfg{.n = 1};
  auto obs = diagonal_of(QuadraticForm(1, {0}, {1}, 0));
  auto r = minimize(cfg, obs, VqeSettings{}, 1);
  EXPECT_LE(r.value, 1e-6);
  EXPECT_NEAR(r.pmf[0], 1.0, 1e-6);
}

TEST(Minimize, RandomQubosReachBruteForceMinimum) {
  std::mt19937_64 gen(41);
  AnsatzConfig cfg{.n = 4};
  int hits = 0;
  const int trials = 10;
  for (int trial = 0; trial < trials; ++trial) {
    auto obs = diagonal_of(testing::random_form(4, gen));
    auto r = minimize(cfg, obs, VqeSettings{}, static_cast<std::uint64_t>(trial));
    EXPECT_GE(r.value, obs.min() - 1e-9);
    hits += r.value <= obs.min() + 1e-4;
  }
  EXPECT_GE(hits, 9);
}

TEST(Minimize, HistoryIsMonotone) {
  std::mt19937_64 gen(43);
  AnsatzConfig cfg{.n = 3};
  auto obs = diagonal_of(testing::random_form(3, gen));
  for (auto mode : {GradientMode::kAdjoint, GradientMode::kParameterShift, GradientMode::kFiniteDifference}) {
    VqeSettings s;
    s.gradient_mode = mode;
    s.restarts = 2;
    s.max_iterations = 200;
    auto r = minimize(cfg, obs, s, 9);
    ASSERT_FALSE(r.history.empty());
    for (std::size_t i = 1; i < r.history.size(); ++i) EXPECT_LE(r.history[i], r.history[i - 1]);
    EXPECT_DOUBLE_EQ(r.history.back(), r.value);
  }
}

TEST(Minimize, DeterministicGivenSeed) {
  std::mt19937_64 gen(47);
  AnsatzConfig cfg{.n = 3};
  auto obs = diagonal_of(testing::random_form(3, gen));
  VqeSettings s;
  s.init_mode = InitMode::kSeededUniform;
  auto a = minimize(cfg, obs, s, 123);
  auto b = minimize(cfg, obs, s, 123);
  EXPECT_EQ(a.theta_star, b.theta_star);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.evaluations, b.evaluations);
}

TEST(Minimize, WarmStartIsNeverWorsened) {
  std::mt19937_64 gen(53);
  AnsatzConfig cfg{.n = 3};
  auto obs = diagonal_of(testing::random_form(3, gen));
  Ansatz ansatz(cfg);
  auto warm = random_theta(cfg.param_count(), gen);
  auto r = minimize(cfg, obs, VqeSettings{}, 5, warm);
  EXPECT_LE(r.value, ansatz.energy(warm, obs.values()) + 1e-15);
}

TEST(Minimize, ShotModeRuns) {
  AnsatzConfig cfg{.n = 1};
  auto obs = diagonal_of(QuadraticForm(1, {0}, {1}, 0));
  VqeSettings s;
  s.shots = 500;
  s.restarts = 1;
  s.max_iterations = 30;
  s.init_mode = InitMode::kSeededUniform;
  auto r = minimize(cfg, obs, s, 2);
  EXPECT_GE(r.value, 0.0);
  EXPECT_LT(r.value, 0.2);
}

TEST(InitialPoints, Layout) {
  AnsatzConfig cfg{.n = 2};
  VqeSettings s;
  s.restarts = 3;
  auto pts = initial_points(cfg, s, 7, std::nullopt);
  ASSERT_EQ(pts.size(), 3U);
  EXPECT_EQ(pts[0], std::vector<double>(8, 0.0));
  for (double x : pts[1]) {
    EXPECT_GE(x, 0.0);
    EXPECT_LT(x, 2 * std::numbers::pi);
  }
  s.init_mode = InitMode::kSuperposition;
  pts = initial_points(cfg, s, 7, std::nullopt);
  auto p = state_of(cfg, pts[0]).probabilities();
  for (double pk : p) EXPECT_NEAR(pk, 0.25, 1e-12);
  EXPECT_THROW(initial_points(cfg, s, 7, std::vector<double>(3, 0.0)), Error);
}

TEST(VqeSettings, Validation) {
  VqeSettings s;
  s.restarts = 0;
  EXPECT_THROW(s.validate(), Error);
  s = VqeSettings{};
  s.max_iterations = 0;
  EXPECT_THROW(s.validate(), Error);
  s = VqeSettings{};
  s.shots = -1;
  EXPECT_THROW(s.validate(), Error);
}

}  // namespace
}  // namespace cvqe
