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
#include <string>

#include "cvqe/problem.hpp"

namespace cvqe {

inline constexpr const char* kGeneratorVersion = "cvqe-gen-1";
inline constexpr int kGeneratorAttempts = 100;
/// Margin by which an adjusted constraint is made to cut off the
/// unconstrained minimizer.
inline constexpr double kActiveMargin = 0.1;
/// An LP dual above this counts as a binding constraint.
inline constexpr double kActiveDualThreshold = 1e-9;

/// Random QCQP whose A, c, d entries (objective first, then constraints
/// 1..M; within a form A row-major, then c, then d) are i.i.d. standard
/// normal draws from Rng(seed). Draws are repeated until the instance is
/// feasible in expectation.
///
/// With ensure_active (and M > 0) the instance must also have a binding
/// constraint: if the unconstrained minimizer b* of f_0 satisfies every
/// constraint, the first constraint m with min_b f_m(b) < f_m(b*) - 0.1 gets
/// d_m shifted so that f_m(b*) = 0.1, and the LP must then report a dual
/// above kActiveDualThreshold. Throws ErrorCode::kGenerationFailed after
/// kGeneratorAttempts draws.
QcqpInstance gen_instance(int n, int m, std::uint64_t seed, bool ensure_active);

}  // namespace cvqe
