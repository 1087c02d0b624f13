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

#include "jsc/channel.hpp"

#include <cmath>
#include <string>

#include "jsc/arraybeam.hpp"
#include "jsc/error.hpp"

namespace jsc::chan {

using num::kPi;
using wave::kSpeedOfLight;

void validate(const TargetTruth& t) {
  if (!(t.range_m > 0.0) || !std::isfinite(t.range_m)) throw DomainError("target range must be positive");
  if (!(std::abs(t.theta) <= beam::deg2rad(60.0) + 1e-12)) throw ConfigError("target DoA outside [-60, 60] deg");
  if (!(t.rcs > 0.0) || !std::isfinite(t.rcs)) throw ConfigError("target RCS must be positive");
  if (!std::isfinite(t.radial_velocity)) throw ConfigError("target velocity must be finite");
}

double LinkBudget::dbm_to_w(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

void validate(const LinkBudget& b) {
  if (!(b.eirp_w > 0.0)) throw ConfigError("EIRP must be positive");
  if (!(b.g_rx > 0.0)) throw ConfigError("receive element gain must be positive");
  if (!(b.t0_k > 0.0)) throw ConfigError("reference temperature must be positive");
  if (!std::isfinite(b.noise_figure_db)) throw ConfigError("noise figure must be finite");
  if (!(b.rho >= 0.0 && b.rho <= 1.0)) throw ConfigError("rho must lie in [0, 1]");
}

double path_gain(const TargetTruth& target, const LinkBudget& budget, const wave::Numerology& numerology) {
  if (!(target.range_m > 0.0)) throw DomainError("path gain at zero range");
  const double four_pi_cubed = std::pow(4.0 * kPi, 3);
  const double d2 = target.range_m * target.range_m;
  return budget.g_rx * kSpeedOfLight * kSpeedOfLight * target.rcs /
         (four_pi_cubed * numerology.fc * numerology.fc * d2 * d2);
}

double noise_power(const LinkBudget& budget, const wave::Numerology& numerology) {
  const double f_lin = std::pow(10.0, budget.noise_figure_db / 10.0);
  return kBoltzmann * budget.t0_k * f_lin * static_cast<double>(numerology.k) * numerology.delta_f;
}

double snr_per_element(const TargetTruth& target, const LinkBudget& budget, const wave::Numerology& numerology,
                       double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) throw DomainError("gamma must lie in [0, 1]");
  const double p_rx = budget.rho * budget.eirp_w * path_gain(target, budget, numerology) * gamma;
  return p_rx / noise_power(budget, numerology);
}

ChannelRealization realize_channel(std::span<const TargetTruth> targets, const wave::Numerology& numerology,
                                   AmplitudeMode mode, const LinkBudget& budget, std::uint64_t seed) {
  Rng rng(seed);
  ChannelRealization out;
  out.paths.reserve(targets.size());
  for (const auto& t : targets) {
    validate(t);
    double mag = 0.0;
    if (mode == AmplitudeMode::SnrDirect) {
      if (!(budget.rho > 0.0)) throw ConfigError("snr-direct amplitudes need rho > 0");
      mag = 1.0 / std::sqrt(budget.rho * budget.eirp_w);
    } else {
      mag = std::sqrt(path_gain(t, budget, numerology));
    }
    const double phi = rng.uniform(0.0, 2.0 * kPi);
    PathState p;
    p.alpha = std::polar(mag, phi);
    p.tau_s = 2.0 * t.range_m / kSpeedOfLight;
    p.doppler_hz = 2.0 * t.radial_velocity * numerology.fc / kSpeedOfLight;
    out.paths.push_back(p);
  }
  out.si_phase = rng.uniform(0.0, 2.0 * kPi);
  return out;
}

std::vector<Complex> tx_gains(std::span<const TargetTruth> targets, const ComplexVector& w_t) {
  std::vector<Complex> g;
  g.reserve(targets.size());
  for (const auto& t : targets)
    g.push_back((beam::steering(t.theta, static_cast<std::size_t>(w_t.size())).transpose() * w_t)(0));
  return g;
}

Complex si_amplitude(const SelfInterference& si, const ChannelRealization& realization,
                     std::span<const Complex> gains) {
  if (!si.enabled()) return {};
  if (realization.paths.empty() || gains.empty())
    throw ConfigError("self-interference level is referenced to a target echo, but no target is present");
  if (!std::isfinite(*si.ssir_db)) throw ConfigError("SSIR must be finite");
  const double echo = std::norm(realization.paths.front().alpha * gains.front());
  const double mag = std::sqrt(echo / std::pow(10.0, *si.ssir_db / 10.0));
  return std::polar(mag, realization.si_phase);
}

PathPhasors path_phasors(const PathState& path, const wave::Numerology& numerology) {
  PathPhasors ph;
  ph.over_k.resize(numerology.k);
  ph.over_m.resize(numerology.ms);
  for (std::size_t k = 0; k < numerology.k; ++k) {
    // Reduce the cycle count before scaling by 2 pi to keep the phase accurate.
    const double cycles = std::fmod(static_cast<double>(k) * numerology.delta_f * path.tau_s, 1.0);
    ph.over_k[k] = std::polar(1.0, -2.0 * kPi * cycles);
  }
  for (std::size_t m = 0; m < numerology.ms; ++m) {
    const double cycles = std::fmod(static_cast<double>(m) * numerology.ts * path.doppler_hz, 1.0);
    ph.over_m[m] = path.alpha * std::polar(1.0, 2.0 * kPi * cycles);
  }
  return ph;
}

ReceivedStack received_grid(const wave::SymbolGrid& symbols, const wave::Numerology& numerology,
                            const ComplexVector& w_t, std::span<const TargetTruth> targets,
                            const ChannelRealization& realization, const SelfInterference& si, double noise_var,
                            std::size_t n_r, Rng& rng) {
  if (targets.size() >= n_r)
    throw ConfigError("number of targets (" + std::to_string(targets.size()) +
                      ") must be less than the number of sensing array elements (" + std::to_string(n_r) + ")");
  if (realization.paths.size() != targets.size()) throw DimensionError("realization does not match target list");
  const auto k_count = static_cast<Eigen::Index>(numerology.k);
  const auto m_count = static_cast<Eigen::Index>(numerology.ms);
  if (symbols.symbols.rows() != k_count || symbols.symbols.cols() != m_count)
    throw DimensionError("symbol grid does not match numerology");
  if (!(noise_var >= 0.0)) throw DomainError("noise variance must be nonnegative");

  const auto gains = tx_gains(targets, w_t);
  const Complex alpha_si = si_amplitude(si, realization, gains);
  std::vector<PathPhasors> phasors;
  std::vector<ComplexVector> a_r;
  for (std::size_t l = 0; l < targets.size(); ++l) {
    phasors.push_back(path_phasors(realization.paths[l], numerology));
    a_r.push_back(beam::steering(targets[l].theta, n_r));
  }

  ReceivedStack out;
  out.k = numerology.k;
  out.ms = numerology.ms;
  out.samples = ComplexMatrix::Zero(static_cast<Eigen::Index>(n_r), k_count * m_count);
  for (Eigen::Index m = 0; m < m_count; ++m) {
    for (Eigen::Index k = 0; k < k_count; ++k) {
      const Eigen::Index c = k + k_count * m;
      const Complex x = symbols.symbols(k, m);
      auto col = out.samples.col(c);
      for (std::size_t l = 0; l < targets.size(); ++l) {
        const Complex beta = phasors[l].over_k[static_cast<std::size_t>(k)] * phasors[l].over_m[static_cast<std::size_t>(m)];
        col += (beta * gains[l] * x) * a_r[l];
      }
      if (alpha_si != Complex{}) col.array() += alpha_si * x;
      if (noise_var > 0.0)
        for (Eigen::Index n = 0; n < col.size(); ++n) col(n) += rng.complex_normal(noise_var);
    }
  }
  return out;
}

ComplexMatrix combine(const ReceivedStack& stack, const ComplexVector& w_r) {
  if (w_r.size() != stack.samples.rows())
    throw DimensionError("combiner length " + std::to_string(w_r.size()) + " does not match " +
                         std::to_string(stack.samples.rows()) + " receive elements");
  const ComplexVector flat = stack.samples.transpose() * w_r;
  return Eigen::Map<const ComplexMatrix>(flat.data(), static_cast<Eigen::Index>(stack.k),
                                         static_cast<Eigen::Index>(stack.ms));
}

}  // namespace jsc::chan
