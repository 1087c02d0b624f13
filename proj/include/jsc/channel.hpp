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
#include <optional>
#include <span>
#include <vector>

#include "jsc/numkernel.hpp"
#include "jsc/rng.hpp"
#include "jsc/waveform.hpp"

namespace jsc::chan {

using num::Complex;
using num::ComplexMatrix;
using num::ComplexVector;

inline constexpr double kBoltzmann = 1.38e-23;  // J/K

/// Ground truth of one point target.
struct TargetTruth {
  double range_m = 0.0;
  double theta = 0.0;            // rad, DoA
  double radial_velocity = 0.0;  // m/s, positive = receding
  double rcs = 1.0;              // m^2
};

void validate(const TargetTruth& t);

struct LinkBudget {
  double eirp_w = 0.0;  // P_T G_T^a
  double g_rx = 1.0;    // single-element receive gain
  double noise_figure_db = 10.0;
  double t0_k = 290.0;
  double rho = 1.0;     // sensing power fraction

  static double dbm_to_w(double dbm);
};

void validate(const LinkBudget& b);

// G_R c^2 sigma / ((4 pi)^3 fc^2 d^4): element-level echo power per watt of EIRP.
double path_gain(const TargetTruth& target, const LinkBudget& budget, const wave::Numerology& numerology);

// N_0 K delta_f with N_0 = k_B T_0 F.
double noise_power(const LinkBudget& budget, const wave::Numerology& numerology);

/// Element-level SNR of a target seen through the sensing beam:
/// rho * EIRP * path_gain * gamma / (N_0 K delta_f). Throws DomainError for zero range.
double snr_per_element(const TargetTruth& target, const LinkBudget& budget, const wave::Numerology& numerology,
                       double gamma);

enum class AmplitudeMode {
  SnrDirect,   // aligned sensing-beam echo has unit element power; noise variance = 1/SNR
  LinkBudget,  // |alpha|^2 = path gain; noise variance = N_0 K delta_f
};

struct PathState {
  Complex alpha;            // |alpha| e^{j phi}
  double tau_s = 0.0;       // 2 r / c
  double doppler_hz = 0.0;  // 2 v fc / c
};

struct ChannelRealization {
  std::vector<PathState> paths;
  double si_phase = 0.0;
};

ChannelRealization realize_channel(std::span<const TargetTruth> targets, const wave::Numerology& numerology,
                                   AmplitudeMode mode, const LinkBudget& budget, std::uint64_t seed);

struct SelfInterference {
  std::optional<double> ssir_db;  // disabled when empty
  bool enabled() const { return ssir_db.has_value(); }
};

// a_T^T(theta_l) w_T per target.
std::vector<Complex> tx_gains(std::span<const TargetTruth> targets, const ComplexVector& w_t);

/// SI amplitude so that |alpha_SI|^2 = (per-element echo power of target 0) / SSIR.
/// Zero when SI is disabled; ConfigError when enabled without a reference target.
Complex si_amplitude(const SelfInterference& si, const ChannelRealization& realization,
                     std::span<const Complex> gains);

// beta_l(k, m) = alpha e^{j 2 pi m Ts fD} e^{-j 2 pi k df tau}, split into its two phasor ramps.
struct PathPhasors {
  std::vector<Complex> over_k;  // e^{-j 2 pi k df tau}, length K
  std::vector<Complex> over_m;  // alpha e^{j 2 pi m Ts fD}, length Ms
};

PathPhasors path_phasors(const PathState& path, const wave::Numerology& numerology);

/// Receive-array symbols, one column per grid cell (column index k + K m).
struct ReceivedStack {
  ComplexMatrix samples;  // N_R x (K Ms)
  std::size_t k = 0;
  std::size_t ms = 0;
};

/// y~ = H x~ + nu~ + n for every (k, m), with H = sum_l beta_l a_R(theta_l) a_T^T(theta_l).
/// Throws ConfigError when targets.size() >= n_r, DimensionError on inconsistent inputs.
ReceivedStack received_grid(const wave::SymbolGrid& symbols, const wave::Numerology& numerology,
                            const ComplexVector& w_t, std::span<const TargetTruth> targets,
                            const ChannelRealization& realization, const SelfInterference& si, double noise_var,
                            std::size_t n_r, Rng& rng);

// y = w_R^T y~ per cell, reshaped to K x Ms.
ComplexMatrix combine(const ReceivedStack& stack, const ComplexVector& w_r);

}  // namespace jsc::chan
