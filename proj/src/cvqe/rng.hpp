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
#include <random>

namespace cvqe {

/// Reproducible random source.
///
/// Raw bits come from std::mt19937_64, whose output sequence is fixed by the
/// C++ standard. The distributions are implemented here rather than taken from
/// <random> because the standard leaves those algorithms to the vendor:
///   uniform():  top 53 bits of one draw scaled by 2^-53, giving [0, 1).
///   normal():   Marsaglia polar method, caching the second variate.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t bits() { return engine_(); }
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double normal();

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// Derives an independent stream seed from a base seed and a stream index
/// (SplitMix64 finalizer over the pair).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

}  // namespace cvqe
