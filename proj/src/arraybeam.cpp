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

#include "jsc/arraybeam.hpp"

#include <cmath>
#include <string>

#include "jsc/error.hpp"

namespace jsc::beam {

ComplexVector steering(double theta, std::size_t n) {
  ComplexVector a(static_cast<Eigen::Index>(n));
  const double u = num::kPi * std::sin(theta);
  for (std::size_t m = 0; m < n; ++m) {
    const double ph = u * static_cast<double>(m);
    a(static_cast<Eigen::Index>(m)) = {std::cos(ph), std::sin(ph)};
  }
  return a;
}

void validate(const BeamSplit& split) {
  if (!(split.rho >= 0.0 && split.rho <= 1.0)) throw ConfigError("rho must lie in [0, 1]");
  if (!(split.eirp_w > 0.0) || !std::isfinite(split.eirp_w)) throw ConfigError("EIRP must be positive");
}

ComplexVector tx_beamformer(const BeamSplit& split, std::size_t n_t) {
  validate(split);
  if (n_t == 0) throw ConfigError("transmit array needs at least one element");
  const double scale = std::sqrt(split.eirp_w) / static_cast<double>(n_t);
  ComplexVector w = ComplexVector::Zero(static_cast<Eigen::Index>(n_t));
  // rho in {0, 1} must reproduce the pure beam exactly, so skip the zero-weight term.
  if (split.rho > 0.0) w += (std::sqrt(split.rho) * scale) * steering(split.theta_sensing, n_t).conjugate();
  if (split.rho < 1.0) w += (std::sqrt(1.0 - split.rho) * scale) * steering(split.theta_comm, n_t).conjugate();
  return w;
}

ComplexVector rx_combiner(double theta, std::size_t n_r) { return steering(theta, n_r).conjugate(); }

double array_factor_power_sin(double sin_offset, std::size_t n) {
  if (n == 0) return 0.0;
  Complex acc{};
  const double u = num::kPi * sin_offset;
  for (std::size_t m = 0; m < n; ++m) {
    const double ph = u * static_cast<double>(m);
    acc += Complex{std::cos(ph), std::sin(ph)};
  }
  const double nn = static_cast<double>(n);
  return std::min(1.0, std::norm(acc) / (nn * nn));
}

double array_factor_power(double beam_theta, double target_theta, std::size_t n) {
  return array_factor_power_sin(std::sin(target_theta) - std::sin(beam_theta), n);
}

double beamwidth_minus10db(std::size_t n) {
  if (n < 2) throw ConfigError("beamwidth needs at least two elements");
  // Mainlobe is monotone on (0, 2/n); the first null sits at 2/n in sin-space.
  double lo = 0.0;
  double hi = 2.0 / static_cast<double>(n);
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (array_factor_power_sin(mid, n) >= 0.1)
      lo = mid;
    else
      hi = mid;
  }
  return 2.0 * std::asin(std::min(1.0, 0.5 * (lo + hi)));
}

double ScanGrid::step() const {
  if (ndir < 2) throw ConfigError("scan grid needs at least two directions");
  return (theta_end - theta_start) / static_cast<double>(ndir - 1);
}

std::vector<double> scan_directions(const ScanGrid& grid) {
  if (!(grid.theta_end > grid.theta_start)) throw ConfigError("scan grid end must exceed start");
  const double step = grid.step();
  std::vector<double> dirs(grid.ndir);
  for (std::size_t i = 0; i < grid.ndir; ++i) dirs[i] = grid.theta_start + static_cast<double>(i) * step;
  dirs.back() = grid.theta_end;
  return dirs;
}

}  // namespace jsc::beam
