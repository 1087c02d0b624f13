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

#include "jsc/waveform.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "jsc/error.hpp"
#include "jsc/rng.hpp"

namespace jsc::wave {

Numerology make_numerology(std::string name, double fc, double delta_f, std::size_t k, std::size_t m,
                           std::size_t ms, std::size_t fp, double tf) {
  if (!(fc > 0.0) || !std::isfinite(fc)) throw ConfigError("carrier frequency must be positive");
  if (!(delta_f > 0.0) || !std::isfinite(delta_f)) throw ConfigError("subcarrier spacing must be positive");
  if (k == 0) throw ConfigError("number of subcarriers must be positive");
  if (m == 0 || ms == 0) throw ConfigError("symbol counts must be positive");
  if (ms > m) throw ConfigError("symbols per direction (" + std::to_string(ms) + ") exceed symbols per frame (" +
                                std::to_string(m) + ")");
  if (fp == 0) throw ConfigError("zero-padding factor must be at least 1");
  if (!(tf > 0.0)) throw ConfigError("frame duration must be positive");
  Numerology n;
  n.name = std::move(name);
  n.fc = fc;
  n.delta_f = delta_f;
  n.k = k;
  n.m = m;
  n.ms = ms;
  n.fp = fp;
  n.tf = tf;
  n.ts = tf / static_cast<double>(m);
  return n;
}

Numerology numerology_preset(std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char c) { return std::toupper(c); });
  if (upper == "NR100") return make_numerology("NR100", 3.5e9, 30e3, 3276, 280, 112, 10);
  if (upper == "NR400") return make_numerology("NR400", 28e9, 120e3, 3168, 1120, 112, 10);
  throw ConfigError("unknown numerology preset '" + std::string(name) + "' (expected NR100 or NR400)");
}

SymbolGrid generate_grid(const Numerology& numerology, std::uint64_t seed) {
  static const double a = 1.0 / std::sqrt(2.0);
  static const num::Complex points[4] = {{a, a}, {-a, a}, {-a, -a}, {a, -a}};
  Rng rng(seed);
  SymbolGrid g;
  g.seed = seed;
  g.symbols.resize(static_cast<Eigen::Index>(numerology.k), static_cast<Eigen::Index>(numerology.ms));
  num::Complex* d = g.symbols.data();
  const std::size_t n = numerology.k * numerology.ms;
  // 32 symbols per 64-bit draw.
  for (std::size_t i = 0; i < n; i += 32) {
    std::uint64_t bits = rng.next_u64();
    for (std::size_t j = i; j < std::min(n, i + 32); ++j, bits >>= 2) d[j] = points[bits & 3u];
  }
  return g;
}

ScanSchedule scan_schedule(std::size_t ndir, const Numerology& numerology) {
  if (ndir == 0) throw ConfigError("scan needs at least one direction");
  ScanSchedule s;
  s.frames = (numerology.ms * ndir + numerology.m - 1) / numerology.m;
  s.duration_s = numerology.tf * static_cast<double>(s.frames);
  return s;
}

PaddedSizes padded_sizes(const Numerology& numerology) {
  return {num::next_power_of_two(numerology.k), num::next_power_of_two(numerology.fp * numerology.ms)};
}

}  // namespace jsc::wave
