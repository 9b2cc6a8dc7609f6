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

#include "cvqe/vqe.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "cvqe/error.hpp"
#include "cvqe/rng.hpp"

namespace cvqe {

std::string to_string(GradientMode mode) {
  switch (mode) {
    case GradientMode::kParameterShift:
      return "parameter-shift";
    case GradientMode::kFiniteDifference:
      return "finite-difference";
    case GradientMode::kAdjoint:
      return "adjoint";
  }
  return "unknown";
}

GradientMode gradient_mode_from_string(const std::string& name) {
  if (name == "parameter-shift") return GradientMode::kParameterShift;
  if (name == "finite-difference") return GradientMode::kFiniteDifference;
  if (name == "adjoint") return GradientMode::kAdjoint;
  throw Error(ErrorCode::kInvalidArgument, "unknown gradient mode '" + name + "'");
}

std::string to_string(InitMode mode) {
  switch (mode) {
    case InitMode::kZeros:
      return "zeros";
    case InitMode::kSeededUniform:
      return "uniform";
    case InitMode::kSuperposition:
      return "superposition";
  }
  return "unknown";
}

InitMode init_mode_from_string(const std::string& name) {
  if (name == "zeros") return InitMode::kZeros;
  if (name == "uniform") return InitMode::kSeededUniform;
  if (name == "superposition") return InitMode::kSuperposition;
  throw Error(ErrorCode::kInvalidArgument, "unknown init mode '" + name + "'");
}

void VqeSettings::validate() const {
  if (max_iterations < 1) throw Error(ErrorCode::kInvalidArgument, "max_iterations must be >= 1");
  if (restarts < 1) throw Error(ErrorCode::kInvalidArgument, "restarts must be >= 1");
  if (!(convergence_tol >= 0.0)) throw Error(ErrorCode::kInvalidArgument, "convergence_tol must be >= 0");
  if (shots < 0) throw Error(ErrorCode::kInvalidArgument, "shots must be >= 0");
  if (!(tie_tol >= 0.0)) throw Error(ErrorCode::kInvalidArgument, "tie_tol must be >= 0");
}

namespace {

// Shifted-evaluation gradients over an arbitrary energy function.
template <class Energy>
void shifted_gradient(Energy&& energy, std::span<const double> theta, std::span<double> grad,
                      GradientMode mode) {
  std::vector<double> x(theta.begin(), theta.end());
  const double shift = mode == GradientMode::kParameterShift ? std::numbers::pi / 2
                                                             : kFiniteDifferenceStep;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double orig = x[i];
    x[i] = orig + shift;
    const double plus = energy(x);
    x[i] = orig - shift;
    const double minus = energy(x);
    x[i] = orig;
    grad[i] = mode == GradientMode::kParameterShift ? 0.5 * (plus - minus)
                                                    : (plus - minus) / (2 * shift);
  }
}

}  // namespace

std::vector<double> gradient(const AnsatzConfig& cfg, const DiagonalObservable& obs,
                             std::span<const double> theta, GradientMode mode) {
  if (obs.n() != cfg.n) throw Error(ErrorCode::kDimensionMismatch, "observable and ansatz differ in n");
  Ansatz ansatz(cfg);
  if (static_cast<int>(theta.size()) != ansatz.param_count()) {
    throw Error(ErrorCode::kDimensionMismatch, "theta length does not match the ansatz");
  }
  std::vector<double> grad(theta.size());
  if (mode == GradientMode::kAdjoint) {
    ansatz.energy_gradient(theta, obs.values(), grad);
  } else {
    shifted_gradient([&](std::span<const double> x) { return ansatz.energy(x, obs.values()); },
                     theta, grad, mode);
  }
  return grad;
}

LocalRun ArmijoDescent::run(const Objective& objective, std::vector<double> x0) const {
  LocalRun out;
  std::vector<double> g(x0.size()), g_trial(x0.size()), trial(x0.size());
  out.x = std::move(x0);
  out.value = objective(out.x, g, out.evaluations);
  out.history.push_back(out.value);
  for (int it = 0; it < max_iterations_; ++it) {
    double gg = 0.0;
    for (double gi : g) gg += gi * gi;
    if (gg == 0.0) {
      out.converged = true;
      return out;
    }
    double step = kInitialStep;
    bool accepted = false;
    double f_trial = 0.0;
    for (int bt = 0; bt < kMaxBacktracks; ++bt, step *= kShrink) {
      for (std::size_t i = 0; i < trial.size(); ++i) trial[i] = out.x[i] - step * g[i];
      f_trial = objective(trial, {}, out.evaluations);
      if (f_trial <= out.value - kSufficientDecrease * step * gg) {
        accepted = true;
        break;
      }
    }
    if (!accepted) {
      out.converged = true;
      return out;
    }
    f_trial = objective(trial, g_trial, out.evaluations);
    const double improvement = out.value - f_trial;
    out.x.swap(trial);
    g.swap(g_trial);
    out.value = f_trial;
    out.history.push_back(out.value);
    if (improvement < tol_) {
      out.converged = true;
      return out;
    }
  }
  return out;
}

std::vector<std::vector<double>> initial_points(const AnsatzConfig& cfg, const VqeSettings& settings,
                                                std::uint64_t seed,
                                                const std::optional<std::vector<double>>& first) {
  const int param_count = cfg.param_count();
  std::vector<std::vector<double>> starts;
  Rng rng(seed);
  auto uniform_point = [&] {
    std::vector<double> x(static_cast<std::size_t>(param_count));
    for (auto& xi : x) xi = rng.uniform(0.0, 2 * std::numbers::pi);
    return x;
  };
  for (int r = 0; r < settings.restarts; ++r) {
    if (r == 0 && first) {
      if (static_cast<int>(first->size()) != param_count) {
        throw Error(ErrorCode::kDimensionMismatch, "warm start has the wrong length");
      }
      starts.push_back(*first);
    } else if (r == 0 && settings.init_mode == InitMode::kZeros) {
      starts.emplace_back(static_cast<std::size_t>(param_count), 0.0);
    } else if (r == 0 && settings.init_mode == InitMode::kSuperposition) {
      std::vector<double> x(static_cast<std::size_t>(param_count), 0.0);
      std::fill(x.begin(), x.begin() + cfg.n, std::numbers::pi / 2);
      starts.push_back(std::move(x));
    } else {
      starts.push_back(uniform_point());
    }
  }
  return starts;
}

VqeResult minimize_from(const AnsatzConfig& cfg, const DiagonalObservable& obs,
                        const VqeSettings& settings,
                        const std::vector<std::vector<double>>& starts, std::uint64_t seed,
                        const LocalOptimizer* optimizer) {
  settings.validate();
  if (obs.n() != cfg.n) throw Error(ErrorCode::kDimensionMismatch, "observable and ansatz differ in n");
  if (starts.empty()) throw Error(ErrorCode::kInvalidArgument, "no starting points");
  const Ansatz ansatz(cfg);
  const auto values = std::span<const double>(obs.values());
  const auto p_count = static_cast<long long>(ansatz.param_count());

  // Shot mode reseeds every estimate from a running counter so that a run is
  // reproducible from `seed` alone.
  std::uint64_t shot_counter = 0;
  std::vector<double> psi, pmf;
  auto sampled_energy = [&](std::span<const double> x) {
    ansatz.prepare(x, psi);
    pmf.resize(psi.size());
    for (std::size_t k = 0; k < psi.size(); ++k) pmf[k] = psi[k] * psi[k];
    double sum = 0.0;
    for (auto k : sample_indices(pmf, settings.shots, derive_seed(seed, shot_counter++))) sum += values[k];
    return sum / settings.shots;
  };

  Ansatz::Workspace ws;
  const Objective objective = [&](std::span<const double> x, std::span<double> grad,
                                  long long& evaluations) -> double {
    if (settings.shots > 0) {
      if (!grad.empty()) {
        shifted_gradient(sampled_energy, x, grad, GradientMode::kParameterShift);
        evaluations += 2 * p_count;
      }
      evaluations += 1;
      return sampled_energy(x);
    }
    if (grad.empty()) {
      evaluations += 1;
      return ansatz.energy(x, values, ws);
    }
    switch (settings.gradient_mode) {
      case GradientMode::kAdjoint:
        evaluations += 1;
        return ansatz.energy_gradient(x, values, grad, ws);
      case GradientMode::kParameterShift:
      case GradientMode::kFiniteDifference:
        shifted_gradient([&](std::span<const double> y) { return ansatz.energy(y, values, ws); },
                         x, grad, settings.gradient_mode);
        evaluations += 2 * p_count + 1;
        return ansatz.energy(x, values, ws);
    }
    return 0.0;
  };

  const ArmijoDescent default_optimizer(settings.max_iterations, settings.convergence_tol);
  const LocalOptimizer& opt = optimizer ? *optimizer : default_optimizer;

  std::vector<LocalRun> runs;
  runs.reserve(starts.size());
  VqeResult result;
  double best = std::numeric_limits<double>::infinity();
  for (const auto& x0 : starts) {
    runs.push_back(opt.run(objective, x0));
    result.evaluations += runs.back().evaluations;
    best = std::min(best, runs.back().value);
  }
  for (std::size_t r = 0; r < runs.size(); ++r) {
    if (runs[r].value <= best + settings.tie_tol) {
      result.theta_star = std::move(runs[r].x);
      result.value = runs[r].value;
      result.converged = runs[r].converged;
      result.best_restart = static_cast<int>(r);
      result.history = std::move(runs[r].history);
      break;
    }
  }

  ansatz.prepare(result.theta_star, psi);
  result.pmf.resize(psi.size());
  for (std::size_t k = 0; k < psi.size(); ++k) result.pmf[k] = psi[k] * psi[k];
  if (settings.shots > 0) {
    // Report the exact value of the returned state, not the last estimate.
    double e = 0.0;
    for (std::size_t k = 0; k < psi.size(); ++k) e += result.pmf[k] * values[k];
    result.value = e;
  }
  return result;
}

VqeResult minimize(const AnsatzConfig& cfg, const DiagonalObservable& obs,
                   const VqeSettings& settings, std::uint64_t seed,
                   const std::optional<std::vector<double>>& warm_start,
                   const LocalOptimizer* optimizer) {
  settings.validate();
  const auto starts = initial_points(cfg, settings, seed, warm_start);
  return minimize_from(cfg, obs, settings, starts, seed, optimizer);
}

}  // namespace cvqe
