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

#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace cvqe {

/// Assignment of n binary variables. Entry i is the value of bit b_i; the
/// matching computational-basis index reads b_0 as the most significant bit,
/// so [1, 1, 0] is index 6.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::vector<std::uint8_t> bits);

  static BitVector from_index(std::uint64_t index, int n);

  int size() const { return static_cast<int>(bits_.size()); }
  std::uint8_t operator[](int i) const { return bits_[static_cast<std::size_t>(i)]; }
  std::uint64_t index() const;
  const std::vector<std::uint8_t>& bits() const { return bits_; }

  bool operator==(const BitVector&) const = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Value of bit i (MSB-first) of basis index k on n bits.
inline int bit_of(std::uint64_t k, int i, int n) {
  return static_cast<int>((k >> (n - 1 - i)) & 1U);
}

/// f(b) = b'Ab + b'c + d over binary b. A is dense row-major and need not be
/// symmetric.
class QuadraticForm {
 public:
  QuadraticForm() = default;
  QuadraticForm(int n, std::vector<double> a, std::vector<double> c, double d);

  static QuadraticForm zero(int n);
  static QuadraticForm constant(int n, double d);

  int n() const { return n_; }
  double a(int i, int j) const { return a_[static_cast<std::size_t>(i * n_ + j)]; }
  const std::vector<double>& a() const { return a_; }
  const std::vector<double>& c() const { return c_; }
  double d() const { return d_; }

  /// Same form with A replaced by (A + A')/2.
  QuadraticForm symmetrized() const;
  /// Same form with d shifted by `delta`.
  QuadraticForm shifted(double delta) const;

  bool operator==(const QuadraticForm&) const = default;

 private:
  int n_ = 0;
  std::vector<double> a_;
  std::vector<double> c_;
  double d_ = 0.0;
};

/// Spin-variable form fbar(s) = s'Abar s + s'cbar + dbar over s in {-1, +1}^n.
struct SpinForm {
  int n = 0;
  std::vector<double> a_bar;  // row-major n x n
  std::vector<double> c_bar;
  double d_bar = 0.0;
};

/// min f_0(b) subject to f_m(b) <= 0 for m = 1..M, all over the same n bits.
class QcqpInstance {
 public:
  QcqpInstance() = default;
  QcqpInstance(QuadraticForm objective, std::vector<QuadraticForm> constraints);

  int n() const { return objective_.n(); }
  int num_constraints() const { return static_cast<int>(constraints_.size()); }
  const QuadraticForm& objective() const { return objective_; }
  const std::vector<QuadraticForm>& constraints() const { return constraints_; }
  const QuadraticForm& constraint(int m) const {
    return constraints_[static_cast<std::size_t>(m)];
  }

  bool operator==(const QcqpInstance&) const = default;

 private:
  QuadraticForm objective_;
  std::vector<QuadraticForm> constraints_;
};

double eval_quadratic(const QuadraticForm& form, const BitVector& b);
/// Evaluates at the bits of basis index k; no allocation.
double eval_quadratic_at(const QuadraticForm& form, std::uint64_t k);

SpinForm to_spin_form(const QuadraticForm& form);
double eval_spin(const SpinForm& spin, std::span<const int> s);

}  // namespace cvqe
