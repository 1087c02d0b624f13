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

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "jsc/numkernel.hpp"

namespace jsc::wave {

inline constexpr double kSpeedOfLight = 299'792'458.0;  // m/s
inline constexpr double kFrameDuration = 10e-3;         // s

/// One 5G NR parameter set. Symbol duration is frame-exact: ts = tf / m.
struct Numerology {
  std::string name;
  double fc = 0.0;       // carrier, Hz
  double delta_f = 0.0;  // subcarrier spacing, Hz
  std::size_t k = 0;     // active subcarriers
  std::size_t m = 0;     // OFDM symbols per frame
  std::size_t ms = 0;    // OFDM symbols per sensing direction
  double ts = 0.0;       // symbol duration incl. CP, s
  double tf = kFrameDuration;
  std::size_t fp = 1;    // Doppler zero-padding factor

  double wavelength() const { return kSpeedOfLight / fc; }
  std::size_t samples_per_direction() const { return k * ms; }
};

// Validated custom numerology; throws ConfigError on any violated invariant.
Numerology make_numerology(std::string name, double fc, double delta_f, std::size_t k, std::size_t m,
                           std::size_t ms, std::size_t fp, double tf = kFrameDuration);

// "NR100" or "NR400" (case-insensitive).
Numerology numerology_preset(std::string_view name);

/// K x Ms grid of QPSK symbols (+-1 +-j)/sqrt(2), column m = OFDM symbol m.
struct SymbolGrid {
  num::ComplexMatrix symbols;
  std::uint64_t seed = 0;
};

SymbolGrid generate_grid(const Numerology& numerology, std::uint64_t seed);

struct ScanSchedule {
  std::size_t frames = 0;
  double duration_s = 0.0;
};

ScanSchedule scan_schedule(std::size_t ndir, const Numerology& numerology);

struct PaddedSizes {
  std::size_t kp = 0;
  std::size_t mp = 0;
};

// kp = nextpow2(K), mp = nextpow2(Fp * Ms).
PaddedSizes padded_sizes(const Numerology& numerology);

}  // namespace jsc::wave
