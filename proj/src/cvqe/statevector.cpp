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

#include "cvqe/statevector.hpp"

#include <algorithm>
#include <cmath>

#include "cvqe/error.hpp"
#include "cvqe/rng.hpp"

namespace cvqe {

namespace {

void check_qubits(int n, int max_qubits) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "need at least one qubit");
  if (n > max_qubits) {
    throw Error(ErrorCode::kLimitExceeded, "n=" + std::to_string(n) +
                                               " exceeds the diagonal limit of " +
                                               std::to_string(max_qubits) + " qubits");
  }
}

// |psi> <- R_Y(theta) on qubit q. Pairs (k, k | mask) with bit q clear in k.
void apply_ry(std::vector<double>& psi, std::size_t mask, double c, double s) {
  const std::size_t dim = psi.size();
  for (std::size_t hi = 0; hi < dim; hi += 2 * mask) {
    for (std::size_t k = hi; k < hi + mask; ++k) {
      const double a0 = psi[k];
      const double a1 = psi[k | mask];
      psi[k] = c * a0 - s * a1;
      psi[k | mask] = s * a0 + c * a1;
    }
  }
}

void apply_cx(std::vector<double>& psi, std::size_t control, std::size_t target) {
  const std::size_t dim = psi.size();
  for (std::size_t k = 0; k < dim; ++k) {
    if ((k & control) && !(k & target)) std::swap(psi[k], psi[k | target]);
  }
}

std::size_t qubit_mask(int q, int n) { return std::size_t{1} << (n - 1 - q); }

}  // namespace

QuantumState::QuantumState(int n, std::vector<std::complex<double>> amplitudes)
    : n_(n), amplitudes_(std::move(amplitudes)) {
  check_qubits(n, 62);
  if (amplitudes_.size() != (std::size_t{1} << n)) {
    throw Error(ErrorCode::kDimensionMismatch, "state needs 2^n amplitudes");
  }
  double norm = 0.0;
  for (const auto& x : amplitudes_) norm += std::norm(x);
  if (std::abs(norm - 1.0) > kNormTolerance) {
    throw Error(ErrorCode::kInvalidArgument, "state is not unit norm");
  }
}

QuantumState QuantumState::basis(int n, std::uint64_t k) {
  std::vector<std::complex<double>> amps(std::size_t{1} << n);
  if (k >= amps.size()) throw Error(ErrorCode::kInvalidArgument, "basis index out of range");
  amps[k] = 1.0;
  return QuantumState(n, std::move(amps));
}

std::vector<double> QuantumState::probabilities() const {
  std::vector<double> p(amplitudes_.size());
  for (std::size_t k = 0; k < p.size(); ++k) p[k] = std::norm(amplitudes_[k]);
  return p;
}

std::string to_string(Entanglement e) {
  switch (e) {
    case Entanglement::kFull:
      return "full";
  }
  return "unknown";
}

Entanglement entanglement_from_string(const std::string& name) {
  if (name == "full") return Entanglement::kFull;
  throw Error(ErrorCode::kInvalidArgument, "unknown entanglement pattern '" + name + "'");
}

Ansatz::Ansatz(const AnsatzConfig& cfg) : cfg_(cfg) {
  check_qubits(cfg.n, kDefaultMaxQubits);
  if (cfg.layers < 0) throw Error(ErrorCode::kInvalidArgument, "negative layer count");
  const int n = cfg.n;
  int p = 0;
  for (int layer = 0; layer < cfg.layers; ++layer) {
    for (int q = 0; q < n; ++q) ops_.push_back({true, q, p++});
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) ops_.push_back({false, i, j});
  }
  if (cfg.final_rotation) {
    for (int q = 0; q < n; ++q) ops_.push_back({true, q, p++});
  }
}

void Ansatz::check_theta(std::span<const double> theta) const {
  if (static_cast<int>(theta.size()) != param_count()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "theta has " + std::to_string(theta.size()) + " entries, ansatz needs " +
                    std::to_string(param_count()));
  }
}

void Ansatz::prepare(std::span<const double> theta, std::vector<double>& psi) const {
  check_theta(theta);
  const int n = cfg_.n;
  psi.assign(dim(), 0.0);
  psi[0] = 1.0;
  for (const Op& op : ops_) {
    if (op.rotation) {
      const double half = 0.5 * theta[static_cast<std::size_t>(op.b)];
      apply_ry(psi, qubit_mask(op.a, n), std::cos(half), std::sin(half));
    } else {
      apply_cx(psi, qubit_mask(op.a, n), qubit_mask(op.b, n));
    }
  }
}

double Ansatz::energy(std::span<const double> theta, std::span<const double> values) const {
  Workspace ws;
  return energy(theta, values, ws);
}

double Ansatz::energy(std::span<const double> theta, std::span<const double> values,
                      Workspace& ws) const {
  prepare(theta, ws.psi);
  double e = 0.0;
  for (std::size_t k = 0; k < ws.psi.size(); ++k) e += ws.psi[k] * ws.psi[k] * values[k];
  return e;
}

double Ansatz::energy_gradient(std::span<const double> theta, std::span<const double> values,
                               std::span<double> grad) const {
  Workspace ws;
  return energy_gradient(theta, values, grad, ws);
}

double Ansatz::energy_gradient(std::span<const double> theta, std::span<const double> values,
                               std::span<double> grad, Workspace& ws) const {
  const int n = cfg_.n;
  auto& psi = ws.psi;
  auto& lam = ws.lam;
  auto& mu = ws.mu;
  prepare(theta, psi);
  lam.resize(psi.size());
  double e = 0.0;
  for (std::size_t k = 0; k < psi.size(); ++k) {
    lam[k] = values[k] * psi[k];
    e += psi[k] * lam[k];
  }
  // Walk the circuit backwards. At each rotation, psi is un-rotated to the
  // state before the gate and dE/dtheta = 2 <lam| dR/dtheta |psi_before>,
  // with dR_Y(t)/dt = R_Y(t + pi)/2.
  for (auto it = ops_.rbegin(); it != ops_.rend(); ++it) {
    const Op& op = *it;
    if (!op.rotation) {
      const auto c = qubit_mask(op.a, n), t = qubit_mask(op.b, n);
      apply_cx(psi, c, t);
      apply_cx(lam, c, t);
      continue;
    }
    const double half = 0.5 * theta[static_cast<std::size_t>(op.b)];
    const double c = std::cos(half), s = std::sin(half);
    const auto mask = qubit_mask(op.a, n);
    apply_ry(psi, mask, c, -s);
    mu = psi;
    apply_ry(mu, mask, -s, c);  // R_Y(t + pi): cos -> -sin, sin -> cos
    double g = 0.0;
    for (std::size_t k = 0; k < mu.size(); ++k) g += lam[k] * mu[k];
    grad[static_cast<std::size_t>(op.b)] = g;
    apply_ry(lam, mask, c, -s);
  }
  return e;
}

QuantumState state_of(const AnsatzConfig& cfg, std::span<const double> theta) {
  Ansatz ansatz(cfg);
  std::vector<double> psi;
  ansatz.prepare(theta, psi);
  std::vector<std::complex<double>> amps(psi.begin(), psi.end());
  return QuantumState(cfg.n, std::move(amps));
}

DiagonalObservable::DiagonalObservable(int n, std::vector<double> values)
    : n_(n), values_(std::move(values)) {
  check_qubits(n, 62);
  if (values_.size() != (std::size_t{1} << n)) {
    throw Error(ErrorCode::kDimensionMismatch, "observable needs 2^n diagonal entries");
  }
}

double DiagonalObservable::min() const { return *std::min_element(values_.begin(), values_.end()); }
double DiagonalObservable::max() const { return *std::max_element(values_.begin(), values_.end()); }

DiagonalObservable diagonal_of(const QuadraticForm& form, int max_qubits) {
  check_qubits(form.n(), max_qubits);
  std::vector<double> values(std::size_t{1} << form.n());
  for (std::size_t k = 0; k < values.size(); ++k) values[k] = eval_quadratic_at(form, k);
  return DiagonalObservable(form.n(), std::move(values));
}

DiagonalObservable pauli_diagonal_of(const SpinForm& spin, int max_qubits) {
  const int n = spin.n;
  check_qubits(n, max_qubits);
  std::vector<double> values(std::size_t{1} << n, spin.d_bar);
  // Accumulate one Pauli term at a time: Z_i contributes s_i(k), Z_i Z_j
  // contributes s_i(k) s_j(k), where s_i(k) = (-1)^bit_i(k).
  for (int i = 0; i < n; ++i) {
    const double ci = spin.c_bar[static_cast<std::size_t>(i)];
    for (std::size_t k = 0; k < values.size(); ++k) {
      values[k] += bit_of(k, i, n) ? -ci : ci;
    }
    for (int j = 0; j < n; ++j) {
      const double aij = spin.a_bar[static_cast<std::size_t>(i * n + j)];
      if (aij == 0.0) continue;
      for (std::size_t k = 0; k < values.size(); ++k) {
        values[k] += (bit_of(k, i, n) ^ bit_of(k, j, n)) ? -aij : aij;
      }
    }
  }
  return DiagonalObservable(n, std::move(values));
}

double expectation(const QuantumState& state, const DiagonalObservable& obs) {
  if (state.n() != obs.n()) {
    throw Error(ErrorCode::kDimensionMismatch, "state and observable differ in qubit count");
  }
  double e = 0.0;
  const auto& amps = state.amplitudes();
  for (std::size_t k = 0; k < amps.size(); ++k) e += std::norm(amps[k]) * obs.values()[k];
  return e;
}

std::vector<std::uint64_t> sample_indices(std::span<const double> pmf, int shots,
                                          std::uint64_t seed) {
  if (shots < 1) throw Error(ErrorCode::kInvalidArgument, "shots must be >= 1");
  std::vector<double> cdf(pmf.size());
  double acc = 0.0;
  for (std::size_t k = 0; k < pmf.size(); ++k) {
    acc += pmf[k];
    cdf[k] = acc;
  }
  Rng rng(seed);
  std::vector<std::uint64_t> out(static_cast<std::size_t>(shots));
  for (auto& idx : out) {
    const double u = rng.uniform() * acc;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    // Skip trailing zero-probability entries that rounding could land on.
    std::size_t k = std::min<std::size_t>(static_cast<std::size_t>(it - cdf.begin()), pmf.size() - 1);
    while (pmf[k] == 0.0 && k > 0) --k;
    idx = k;
  }
  return out;
}

std::vector<BitVector> sample(const QuantumState& state, int shots, std::uint64_t seed) {
  const auto pmf = state.probabilities();
  std::vector<BitVector> out;
  out.reserve(static_cast<std::size_t>(shots));
  for (auto k : sample_indices(pmf, shots, seed)) out.push_back(BitVector::from_index(k, state.n()));
  return out;
}

double estimate_expectation(const QuantumState& state, const QuadraticForm& form, int shots,
                            std::uint64_t seed) {
  if (form.n() != state.n()) {
    throw Error(ErrorCode::kDimensionMismatch, "state and form differ in qubit count");
  }
  const auto pmf = state.probabilities();
  double sum = 0.0;
  for (auto k : sample_indices(pmf, shots, seed)) sum += eval_quadratic_at(form, k);
  return sum / shots;
}

}  // namespace cvqe
