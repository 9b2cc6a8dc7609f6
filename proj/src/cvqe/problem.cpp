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

#include "cvqe/problem.hpp"

#include <cmath>
#include <string>

#include "cvqe/error.hpp"

namespace cvqe {

BitVector::BitVector(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto b : bits_) {
    if (b > 1) throw Error(ErrorCode::kInvalidArgument, "bit values must be 0 or 1");
  }
}

BitVector BitVector::from_index(std::uint64_t index, int n) {
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) bits[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(bit_of(index, i, n));
  return BitVector(std::move(bits));
}

std::uint64_t BitVector::index() const {
  std::uint64_t k = 0;
  for (auto b : bits_) k = (k << 1) | b;
  return k;
}

QuadraticForm::QuadraticForm(int n, std::vector<double> a, std::vector<double> c, double d)
    : n_(n), a_(std::move(a)), c_(std::move(c)), d_(d) {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "negative bit count");
  const auto nn = static_cast<std::size_t>(n);
  if (a_.size() != nn * nn) {
    throw Error(ErrorCode::kDimensionMismatch,
                "A has " + std::to_string(a_.size()) + " entries, expected " +
                    std::to_string(nn * nn));
  }
  if (c_.size() != nn) {
    throw Error(ErrorCode::kDimensionMismatch,
                "c has " + std::to_string(c_.size()) + " entries, expected " +
                    std::to_string(nn));
  }
  auto finite = [](double x) { return std::isfinite(x); };
  for (double x : a_) if (!finite(x)) throw Error(ErrorCode::kInvalidArgument, "A has a non-finite entry");
  for (double x : c_) if (!finite(x)) throw Error(ErrorCode::kInvalidArgument, "c has a non-finite entry");
  if (!finite(d_)) throw Error(ErrorCode::kInvalidArgument, "d is not finite");
}

QuadraticForm QuadraticForm::zero(int n) { return constant(n, 0.0); }

QuadraticForm QuadraticForm::constant(int n, double d) {
  const auto nn = static_cast<std::size_t>(n);
  return QuadraticForm(n, std::vector<double>(nn * nn, 0.0), std::vector<double>(nn, 0.0), d);
}

QuadraticForm QuadraticForm::symmetrized() const {
  std::vector<double> s(a_.size());
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      s[static_cast<std::size_t>(i * n_ + j)] = 0.5 * (a(i, j) + a(j, i));
  return QuadraticForm(n_, std::move(s), c_, d_);
}

QuadraticForm QuadraticForm::shifted(double delta) const {
  return QuadraticForm(n_, a_, c_, d_ + delta);
}

QcqpInstance::QcqpInstance(QuadraticForm objective, std::vector<QuadraticForm> constraints)
    : objective_(std::move(objective)), constraints_(std::move(constraints)) {
  if (objective_.n() < 1) throw Error(ErrorCode::kInvalidArgument, "instance needs n >= 1");
  for (std::size_t m = 0; m < constraints_.size(); ++m) {
    if (constraints_[m].n() != objective_.n()) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "constraint " + std::to_string(m + 1) + " has n=" +
                      std::to_string(constraints_[m].n()) + ", objective has n=" +
                      std::to_string(objective_.n()));
    }
  }
}

double eval_quadratic(const QuadraticForm& form, const BitVector& b) {
  if (b.size() != form.n()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "bit vector has length " + std::to_string(b.size()) + ", form has n=" +
                    std::to_string(form.n()));
  }
  return eval_quadratic_at(form, b.index());
}

double eval_quadratic_at(const QuadraticForm& form, std::uint64_t k) {
  const int n = form.n();
  double value = form.d();
  for (int i = 0; i < n; ++i) {
    if (!bit_of(k, i, n)) continue;
    value += form.c()[static_cast<std::size_t>(i)];
    for (int j = 0; j < n; ++j) {
      if (bit_of(k, j, n)) value += form.a(i, j);
    }
  }
  return value;
}

SpinForm to_spin_form(const QuadraticForm& form) {
  // Substituting b = (1 - s)/2 gives Abar = A/4, dbar = 1'A1/4 + 1'c/2 + d and
  // cbar = -(Asym 1 + c)/2 with Asym = (A + A')/2. The linear term picks up
  // both 1'As and s'A1, so a non-symmetric A contributes its row and column
  // sums equally.
  const int n = form.n();
  SpinForm spin;
  spin.n = n;
  spin.a_bar.resize(form.a().size());
  spin.c_bar.resize(static_cast<std::size_t>(n));
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    double row = 0.0, col = 0.0;
    for (int j = 0; j < n; ++j) {
      spin.a_bar[static_cast<std::size_t>(i * n + j)] = 0.25 * form.a(i, j);
      row += form.a(i, j);
      col += form.a(j, i);
      total += form.a(i, j);
    }
    spin.c_bar[static_cast<std::size_t>(i)] =
        -0.5 * (0.5 * (row + col) + form.c()[static_cast<std::size_t>(i)]);
  }
  double csum = 0.0;
  for (double ci : form.c()) csum += ci;
  spin.d_bar = 0.25 * total + 0.5 * csum + form.d();
  return spin;
}

double eval_spin(const SpinForm& spin, std::span<const int> s) {
  if (static_cast<int>(s.size()) != spin.n) {
    throw Error(ErrorCode::kDimensionMismatch, "spin vector length does not match form");
  }
  const int n = spin.n;
  double value = spin.d_bar;
  for (int i = 0; i < n; ++i) {
    value += spin.c_bar[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(i)];
    for (int j = 0; j < n; ++j) {
      value += spin.a_bar[static_cast<std::size_t>(i * n + j)] * s[static_cast<std::size_t>(i)] *
               s[static_cast<std::size_t>(j)];
    }
  }
  return value;
}

}  // namespace cvqe
