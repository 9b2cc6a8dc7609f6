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


// Reference implementations used only by the tests. Each one avoids the
// library's own code path: naive loops, dense matrices, vertex enumeration.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "cvqe/problem.hpp"

namespace cvqe::testing {

inline QuadraticForm random_form(int n, std::mt19937_64& gen, double scale = 1.0) {
  std::normal_distribution<double> nd(0.0, scale);
  std::vector<double> a(static_cast<std::size_t>(n * n)), c(static_cast<std::size_t>(n));
  for (auto& x : a) x = nd(gen);
  for (auto& x : c) x = nd(gen);
  return QuadraticForm(n, a, c, nd(gen));
}

// Bit i of index k, qubit 0 being the most significant bit.
inline std::vector<int> bits_msb_first(std::uint64_t k, int n) {
  std::vector<int> b(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i, k >>= 1) b[static_cast<std::size_t>(i)] = static_cast<int>(k & 1U);
  return b;
}

inline double naive_eval(const QuadraticForm& f, const std::vector<double>& x) {
  const int n = f.n();
  double v = f.d();
  for (int i = 0; i < n; ++i) {
    v += x[static_cast<std::size_t>(i)] * f.c()[static_cast<std::size_t>(i)];
    for (int j = 0; j < n; ++j) v += x[static_cast<std::size_t>(i)] * f.a(i, j) * x[static_cast<std::size_t>(j)];
  }
  return v;
}

inline double naive_eval_index(const QuadraticForm& f, std::uint64_t k) {
  auto b = bits_msb_first(k, f.n());
  return naive_eval(f, std::vector<double>(b.begin(), b.end()));
}

// --- dense-matrix circuit ---------------------------------------------------

using CMatrix = std::vector<std::vector<std::complex<double>>>;

inline CMatrix identity(std::size_t d) {
  CMatrix m(d, std::vector<std::complex<double>>(d, 0.0));
  for (std::size_t i = 0; i < d; ++i) m[i][i] = 1.0;
  return m;
}

inline CMatrix kron(const CMatrix& a, const CMatrix& b) {
  const std::size_t ra = a.size(), rb = b.size();
  CMatrix m(ra * rb, std::vector<std::complex<double>>(ra * rb, 0.0));
  for (std::size_t i = 0; i < ra; ++i)
    for (std::size_t j = 0; j < ra; ++j)
      for (std::size_t k = 0; k < rb; ++k)
        for (std::size_t l = 0; l < rb; ++l) m[i * rb + k][j * rb + l] = a[i][j] * b[k][l];
  return m;
}

inline std::vector<std::complex<double>> mat_vec(const CMatrix& m, const std::vector<std::complex<double>>& v) {
  std::vector<std::complex<double>> out(v.size(), 0.0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

// RY(t) on qubit q of n, built as I x .. x RY x .. x I with qubit 0 leftmost.
inline CMatrix ry_full(int n, int q, double t) {
  const double c = std::cos(t / 2), s = std::sin(t / 2);
  CMatrix ry = {{c, -s}, {s, c}};
  CMatrix m = identity(1);
  for (int i = 0; i < n; ++i) m = kron(m, i == q ? ry : identity(2));
  return m;
}

inline CMatrix cx_full(int n, int control, int target) {
  const std::size_t d = std::size_t{1} << n;
  CMatrix m(d, std::vector<std::complex<double>>(d, 0.0));
  for (std::size_t k = 0; k < d; ++k) {
    auto b = bits_msb_first(k, n);
    if (b[static_cast<std::size_t>(control)]) b[static_cast<std::size_t>(target)] ^= 1;
    std::size_t j = 0;
    for (int bit : b) j = (j << 1) | static_cast<std::size_t>(bit);
    m[j][k] = 1.0;
  }
  return m;
}

// Layers of RY on every qubit followed by CX on every pair i < j, then one
// more RY layer.
inline std::vector<std::complex<double>> dense_ansatz_state(int n, int layers, const std::vector<double>& theta) {
  std::vector<std::complex<double>> psi(std::size_t{1} << n, 0.0);
  psi[0] = 1.0;
  std::size_t p = 0;
  for (int l = 0; l <= layers; ++l) {
    for (int q = 0; q < n; ++q) psi = mat_vec(ry_full(n, q, theta[p++]), psi);
    if (l == layers) break;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) psi = mat_vec(cx_full(n, i, j), psi);
  }
  return psi;
}

// --- LP by vertex enumeration ----------------------------------------------

// Solves the square system m x = r in place; false if singular.
inline bool solve_square(std::vector<std::vector<double>> m, std::vector<double> r, std::vector<double>& x) {
  const std::size_t s = r.size();
  for (std::size_t col = 0; col < s; ++col) {
    std::size_t piv = col;
    for (std::size_t i = col + 1; i < s; ++i)
      if (std::abs(m[i][col]) > std::abs(m[piv][col])) piv = i;
    if (std::abs(m[piv][col]) < 1e-12) return false;
    std::swap(m[piv], m[col]);
    std::swap(r[piv], r[col]);
    for (std::size_t i = 0; i < s; ++i) {
      if (i == col) continue;
      const double f = m[i][col] / m[col][col];
      for (std::size_t j = col; j < s; ++j) m[i][j] -= f * m[col][j];
      r[i] -= f * r[col];
    }
  }
  x.resize(s);
  for (std::size_t i = 0; i < s; ++i) x[i] = r[i] / m[i][i];
  return true;
}

struct VertexLpResult {
  bool feasible = false;
  double objective = std::numeric_limits<double>::infinity();
};

// Minimum of sum_k p_k f0(k) over PMFs with sum_k p_k fm(k) <= 0. Every
// vertex of that polytope has a support S of size s <= M+1 on which s-1 of
// the constraints are tight; enumerate all (S, tight set) pairs.
inline VertexLpResult vertex_lp(const QcqpInstance& inst) {
  const std::size_t n_states = std::size_t{1} << inst.n();
  const int m_count = inst.num_constraints();
  std::vector<std::vector<double>> val(static_cast<std::size_t>(m_count) + 1, std::vector<double>(n_states));
  for (std::size_t k = 0; k < n_states; ++k) {
    val[0][k] = naive_eval_index(inst.objective(), k);
    for (int m = 0; m < m_count; ++m) val[static_cast<std::size_t>(m) + 1][k] = naive_eval_index(inst.constraint(m), k);
  }
  VertexLpResult best;
  std::vector<std::size_t> support;
  std::vector<int> tight;
  auto evaluate = [&] {
    const std::size_t s = support.size();
    std::vector<std::vector<double>> mat(s, std::vector<double>(s));
    std::vector<double> rhs(s, 0.0), p;
    for (std::size_t j = 0; j < s; ++j) mat[0][j] = 1.0;
    rhs[0] = 1.0;
    for (std::size_t r = 1; r < s; ++r)
      for (std::size_t j = 0; j < s; ++j) mat[r][j] = val[static_cast<std::size_t>(tight[r - 1]) + 1][support[j]];
    if (!solve_square(mat, rhs, p)) return;
    for (double pj : p)
      if (pj < -1e-9) return;
    for (int m = 0; m < m_count; ++m) {
      double e = 0.0;
      for (std::size_t j = 0; j < s; ++j) e += p[j] * val[static_cast<std::size_t>(m) + 1][support[j]];
      if (e > 1e-9) return;
    }
    double obj = 0.0;
    for (std::size_t j = 0; j < s; ++j) obj += p[j] * val[0][support[j]];
    best.feasible = true;
    best.objective = std::min(best.objective, obj);
  };
  auto choose_tight = [&](auto&& self, int from, std::size_t need) -> void {
    if (tight.size() == need) {
      evaluate();
      return;
    }
    for (int m = from; m < m_count; ++m) {
      tight.push_back(m);
      self(self, m + 1, need);
      tight.pop_back();
    }
  };
  auto choose_support = [&](auto&& self, std::size_t from) -> void {
    if (!support.empty()) choose_tight(choose_tight, 0, support.size() - 1);
    if (support.size() == static_cast<std::size_t>(m_count) + 1) return;
    for (std::size_t k = from; k < n_states; ++k) {
      support.push_back(k);
      self(self, k + 1);
      support.pop_back();
    }
  };
  choose_support(choose_support, 0);
  return best;
}

}  // namespace cvqe::testing
