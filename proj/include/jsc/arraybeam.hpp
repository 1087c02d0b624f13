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
#include <vector>

#include "jsc/numkernel.hpp"

namespace jsc::beam {

using num::Complex;
using num::ComplexVector;

inline double deg2rad(double deg) { return deg * num::kPi / 180.0; }
inline double rad2deg(double rad) { return rad * 180.0 / num::kPi; }

// Half-wavelength ULA response: entry m = exp(j pi m sin(theta)).
ComplexVector steering(double theta, std::size_t n);

/// Power split between the sensing beam and the communication beam.
struct BeamSplit {
  double rho = 1.0;           // fraction of power steered into the sensing beam
  double theta_sensing = 0.0; // rad
  double theta_comm = 0.0;    // rad
  double eirp_w = 1.0;        // P_T * G_T^a
};

void validate(const BeamSplit& split);

// w_T = sqrt(rho) w_s + sqrt(1 - rho) w_c with w_x = sqrt(EIRP) / N_T * conj(a(theta_x)).
ComplexVector tx_beamformer(const BeamSplit& split, std::size_t n_t);

// conj(a(theta)); y = w_R^T y_tilde.
ComplexVector rx_combiner(double theta, std::size_t n_r);

// |sum_m exp(j pi m (sin theta_target - sin theta_beam))|^2 / n^2
double array_factor_power(double beam_theta, double target_theta, std::size_t n);

// Same, with the offset given directly in sin-space.
double array_factor_power_sin(double sin_offset, std::size_t n);

// Full mainlobe width (rad) at the -10 dB points of a broadside beam.
double beamwidth_minus10db(std::size_t n);

struct ScanGrid {
  double theta_start = deg2rad(-60.0);
  double theta_end = deg2rad(60.0);
  std::size_t ndir = 2;

  double step() const;
};

// Inclusive endpoints: theta_start + i * step, i = 0..ndir-1.
std::vector<double> scan_directions(const ScanGrid& grid);

}  // namespace jsc::beam
