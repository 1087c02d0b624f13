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
#include "jsc/waveform.hpp"

namespace jsc::est {

using num::Complex;
using num::ComplexMatrix;
using num::ComplexVector;
using num::RealMatrix;

// ---------------------------------------------------------------------------
// Angle domain
// ---------------------------------------------------------------------------

// (1 / N) sum_c y_c y_c^H over the columns of an N_R x N snapshot matrix.
ComplexMatrix sample_covariance(const ComplexMatrix& snapshots);

/// Minimum-description-length model order.
///
/// MDL(s) = -(N_R - s) n ln(geo/arith of the N_R - s smallest eigenvalues)
///          + s (2 N_R - s) ln(n) / 2,   s = 0..N_R-1.
/// Eigenvalues must be descending; values below 1e-15 of the largest are floored there.
std::size_t mdl_order(std::span<const double> eigenvalues_desc, double n_samples);

struct PseudoSpectrum {
  std::vector<double> theta;   // rad, strictly increasing
  std::vector<double> values;  // 1 / ||U_n^H a(theta)||^2
};

// MUSIC pseudo-spectrum on theta_min + i * step, i = 0..floor((theta_max - theta_min) / step).
PseudoSpectrum music_spectrum(const ComplexMatrix& noise_subspace, double theta_min, double theta_max,
                              double step);

struct DoaEstimate {
  double theta = 0.0;
  double value = 0.0;
  std::size_t index = 0;
};

// Grid argmax; ties go to the point nearest the window center.
DoaEstimate doa_estimate(const PseudoSpectrum& spectrum);

// ---------------------------------------------------------------------------
// Range-Doppler domain
// ---------------------------------------------------------------------------

// g = y / x elementwise.
ComplexMatrix remove_data(const ComplexMatrix& y, const ComplexMatrix& x);

struct Resolutions {
  double range_m = 0.0;       // c / (2 df Kp)
  double velocity_mps = 0.0;  // c / (2 fc Ts Mp)
};

Resolutions resolutions(const wave::Numerology& numerology);

struct RangeDopplerMap {
  RealMatrix values;  // Kp x Mp; row q = range bin, column p = Doppler bin
  double bin_range_m = 0.0;
  double bin_velocity_mps = 0.0;
};

/// |sum_k (sum_m g e^{-j 2 pi m p / Mp}) e^{+j 2 pi k q / Kp}|^2 on the full padded grid.
RangeDopplerMap periodogram(const ComplexMatrix& g, std::size_t kp, std::size_t mp, Resolutions bins = {});

/// What the detector needs from a map, without storing Kp x Mp values.
struct MapSummary {
  double peak = 0.0;
  std::size_t q = 0;
  std::size_t p = 0;
  std::size_t kp = 0;
  std::size_t mp = 0;
  std::vector<double> range_profile;  // max over Doppler per range bin (when requested)
};

/// Streams the periodogram of fixed-size grids; owns transform scratch, one per thread.
class PeriodogramEngine {
 public:
  PeriodogramEngine(std::size_t k, std::size_t ms, std::size_t kp, std::size_t mp);
  explicit PeriodogramEngine(const wave::Numerology& numerology);

  MapSummary summarize(const ComplexMatrix& g, bool with_range_profile = false);

 private:
  num::PaddedTransform2d transform_;
};

MapSummary summarize(const RangeDopplerMap& map);

struct Detection {
  std::size_t q = 0;
  std::size_t p = 0;
  double r_hat = 0.0;
  double v_hat = 0.0;
  double peak = 0.0;
};

/// Global argmax if it reaches eta. Doppler bins above Mp/2 wrap to negative velocity.
std::optional<Detection> detect_and_estimate(const MapSummary& map, double eta,
                                             const wave::Numerology& numerology);
std::optional<Detection> detect_and_estimate(const RangeDopplerMap& map, double eta,
                                             const wave::Numerology& numerology);

// One emitted target point per sensing direction.
struct DetectionRecord {
  double r_hat = 0.0;       // m
  double v_hat = 0.0;       // m/s
  double peak_power = 0.0;  // periodogram value at the detected bin
  double theta_hat = 0.0;   // rad
  double music_peak = 0.0;  // pseudo-spectrum value at theta_hat
  std::size_t direction_index = 0;
  std::size_t model_order = 0;  // MDL estimate before any fallback
};

// ---------------------------------------------------------------------------
// Threshold
// ---------------------------------------------------------------------------

// Single-bin exponential tail: mu ln(bins / pfa).
double exponential_tail_threshold(double mu, double bins, double pfa);

// Mean periodogram bin under H0: K Ms N_R sigma^2.
double noise_bin_mean(const wave::Numerology& numerology, std::size_t n_r, double noise_var);

/// Per-direction threshold, in units of the H0 bin mean, for a map-maximum false-alarm rate.
struct ThresholdCalibration {
  double pfa = 0.0;
  std::size_t maps = 0;
  std::uint64_t seed = 0;
  std::size_t k = 0, ms = 0, kp = 0, mp = 0;
  double initial_factor = 0.0;    // ln(Kp Mp / pfa), exponential-bin model
  double empirical_factor = 0.0;  // (1 - pfa) sample quantile of max / mu
  double factor = 0.0;            // calibrated eta / mu
  double effective_bins = 0.0;    // tail fit: P(max/mu > t) ~ effective_bins * e^{-t}

  double threshold(double mu) const { return factor * mu; }
  bool matches(const wave::Numerology& numerology, double pfa_wanted) const;
};

/// Noise-only Monte Carlo calibration over `maps` unit-variance maps (at least 2000 for
/// production thresholds). pfa = 1 yields factor 0. ConfigError unless 0 < pfa <= 1.
ThresholdCalibration calibrate_threshold(double pfa, const wave::Numerology& numerology, std::size_t maps,
                                         std::uint64_t seed);

// Max / mu of one unit-variance noise map; exposed for calibration self-checks.
double noise_map_peak_ratio(PeriodogramEngine& engine, const wave::Numerology& numerology, std::uint64_t seed);

}  // namespace jsc::est
