// Copyright 2026 The jsc-sim Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <random>

namespace jsc {

/// Mixes a base seed with a path of indices (trial, direction, ...) into an
/// independent substream seed. SplitMix64 finalizer applied per component.
std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> path);

/// Seeded generator with portable variate transforms.
///
/// The engine is std::mt19937_64 (bit-exact by the standard); uniform, normal and
/// gamma variates are computed here rather than through <random> distributions so
/// that a (seed, path) pair yields identical numbers across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  double normal();

  // Circularly-symmetric complex Gaussian, E|z|^2 = variance.
  std::complex<double> complex_normal(double variance = 1.0);

  // Gamma(shape, scale) via Marsaglia-Tsang; shape > 0.
  double gamma(double shape, double scale = 1.0);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace jsc
