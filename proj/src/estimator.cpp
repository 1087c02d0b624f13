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

#include "jsc/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "jsc/arraybeam.hpp"
#include "jsc/error.hpp"

namespace jsc::est {

ComplexMatrix sample_covariance(const ComplexMatrix& snapshots) {
  if (snapshots.cols() == 0 || snapshots.rows() == 0) {
    throw DimensionError("sample_covariance: empty snapshot stack");
  }
  ComplexMatrix r = ComplexMatrix::Zero(snapshots.rows(), snapshots.rows());
  r.selfadjointView<Eigen::Lower>().rankUpdate(snapshots, 1.0 / static_cast<double>(snapshots.cols()));
  r.triangularView<Eigen::StrictlyUpper>() = r.adjoint();
  return r;
}

std::size_t mdl_order(std::span<const double> eigenvalues_desc, double n_samples) {
  const std::size_t n_r = eigenvalues_desc.size();
  if (n_r == 0) return 0;
  const double largest = eigenvalues_desc.front();
  if (!(largest > 0.0)) return 0;
  const double floor = largest * 1e-15;

  std::vector<double> lambda(n_r), log_lambda(n_r);
  for (std::size_t i = 0; i < n_r; ++i) {
    lambda[i] = std::max(eigenvalues_desc[i], floor);
    log_lambda[i] = std::log(lambda[i]);
  }

  const double log_n = std::log(n_samples);
  const double nr = static_cast<double>(n_r);
  std::size_t best = 0;
  double best_score = std::numeric_limits<double>::infinity();
  double tail_sum = 0.0, tail_log_sum = 0.0;
  std::vector<double> score(n_r);
  // Accumulate tails from the smallest eigenvalue upwards.
  for (std::size_t i = n_r; i-- > 0;) {
    tail_sum += lambda[i];
    tail_log_sum += log_lambda[i];
    const double count = nr - static_cast<double>(i);
    const double log_ratio = tail_log_sum / count - std::log(tail_sum / count);
    const double s = static_cast<double>(i);
    score[i] = -count * n_samples * std::min(log_ratio, 0.0) + 0.5 * s * (2.0 * nr - s) * log_n;
  }
  for (std::size_t s = 0; s < n_r; ++s) {
    if (score[s] < best_score) {
      best_score = score[s];
      best = s;
    }
  }
  return best;
}

PseudoSpectrum music_spectrum(const ComplexMatrix& noise_subspace, double theta_min, double theta_max,
                              double step) {
  if (noise_subspace.cols() == 0 || noise_subspace.rows() == 0) {
    throw DimensionError("music_spectrum: noise subspace has no columns");
  }
  if (!(step > 0.0) || !std::isfinite(theta_min) || !std::isfinite(theta_max) || theta_max < theta_min) {
    throw ConfigError("music_spectrum: empty or invalid window");
  }
  const auto count = static_cast<std::size_t>(std::floor((theta_max - theta_min) / step + 1e-9)) + 1;
  const auto n_r = static_cast<std::size_t>(noise_subspace.rows());

  PseudoSpectrum out;
  out.theta.resize(count);
  out.values.resize(count);
  ComplexMatrix a(static_cast<Eigen::Index>(n_r), static_cast<Eigen::Index>(count));
  for (std::size_t i = 0; i < count; ++i) {
    out.theta[i] = theta_min + static_cast<double>(i) * step;
    a.col(static_cast<Eigen::Index>(i)) = beam::steering(out.theta[i], n_r);
  }
  const Eigen::RowVectorXd denom = (noise_subspace.adjoint() * a).colwise().squaredNorm();
  constexpr double kTiny = 1e-300;
  for (std::size_t i = 0; i < count; ++i) {
    out.values[i] = 1.0 / std::max(denom(static_cast<Eigen::Index>(i)), kTiny);
  }
  return out;
}

DoaEstimate doa_estimate(const PseudoSpectrum& spectrum) {
  if (spectrum.values.empty() || spectrum.values.size() != spectrum.theta.size()) {
    throw DimensionError("doa_estimate: empty or inconsistent spectrum");
  }
  const double center = 0.5 * (spectrum.theta.front() + spectrum.theta.back());
  DoaEstimate best{spectrum.theta[0], spectrum.values[0], 0};
  for (std::size_t i = 1; i < spectrum.values.size(); ++i) {
    const double v = spectrum.values[i];
    const bool higher = v > best.value;
    const bool closer_tie =
        v == best.value && std::abs(spectrum.theta[i] - center) < std::abs(best.theta - center);
    if (higher || closer_tie) best = {spectrum.theta[i], v, i};
  }
  return best;
}

ComplexMatrix remove_data(const ComplexMatrix& y, const ComplexMatrix& x) {
  if (y.rows() != x.rows() || y.cols() != x.cols()) {
    throw DimensionError("remove_data: grid shapes differ");
  }
  if ((x.array().abs2() == 0.0).any()) throw DomainError("remove_data: zero data symbol");
  return y.cwiseQuotient(x);
}

Resolutions resolutions(const wave::Numerology& numerology) {
  const auto sizes = wave::padded_sizes(numerology);
  return {wave::kSpeedOfLight / (2.0 * numerology.delta_f * static_cast<double>(sizes.kp)),
          wave::kSpeedOfLight / (2.0 * numerology.fc * numerology.ts * static_cast<double>(sizes.mp))};
}

RangeDopplerMap periodogram(const ComplexMatrix& g, std::size_t kp, std::size_t mp, Resolutions bins) {
  num::PaddedTransform2d transform(static_cast<std::size_t>(g.rows()), static_cast<std::size_t>(g.cols()),
                                   kp, mp);
  RangeDopplerMap map;
  map.values.resize(static_cast<Eigen::Index>(kp), static_cast<Eigen::Index>(mp));
  map.bin_range_m = bins.range_m;
  map.bin_velocity_mps = bins.velocity_mps;
  transform.run(g, [&](std::size_t q, std::span<const Complex> row) {
    for (std::size_t p = 0; p < mp; ++p) {
      map.values(static_cast<Eigen::Index>(q), static_cast<Eigen::Index>(p)) = std::norm(row[p]);
    }
  });
  return map;
}

PeriodogramEngine::PeriodogramEngine(std::size_t k, std::size_t ms, std::size_t kp, std::size_t mp)
    : transform_(k, ms, kp, mp) {}

PeriodogramEngine::PeriodogramEngine(const wave::Numerology& numerology)
    : PeriodogramEngine(numerology.k, numerology.ms, wave::padded_sizes(numerology).kp,
                        wave::padded_sizes(numerology).mp) {}

MapSummary PeriodogramEngine::summarize(const ComplexMatrix& g, bool with_range_profile) {
  MapSummary out;
  out.kp = transform_.kp();
  out.mp = transform_.mp();
  out.peak = -1.0;
  if (with_range_profile) out.range_profile.assign(out.kp, 0.0);
  transform_.run(g, [&](std::size_t q, std::span<const Complex> row) {
    double row_max = -1.0;
    std::size_t row_arg = 0;
    for (std::size_t p = 0; p < row.size(); ++p) {
      const double v = row[p].real() * row[p].real() + row[p].imag() * row[p].imag();
      if (v > row_max) {
        row_max = v;
        row_arg = p;
      }
    }
    if (with_range_profile) out.range_profile[q] = row_max;
    if (row_max > out.peak) {
      out.peak = row_max;
      out.q = q;
      out.p = row_arg;
    }
  });
  return out;
}

MapSummary summarize(const RangeDopplerMap& map) {
  MapSummary out;
  out.kp = static_cast<std::size_t>(map.values.rows());
  out.mp = static_cast<std::size_t>(map.values.cols());
  out.peak = -1.0;
  out.range_profile.assign(out.kp, 0.0);
  for (std::size_t q = 0; q < out.kp; ++q) {
    double row_max = -1.0;
    for (std::size_t p = 0; p < out.mp; ++p) {
      const double v = map.values(static_cast<Eigen::Index>(q), static_cast<Eigen::Index>(p));
      if (v > row_max) row_max = v;
      if (v > out.peak) {
        out.peak = v;
        out.q = q;
        out.p = p;
      }
    }
    out.range_profile[q] = row_max;
  }
  return out;
}

std::optional<Detection> detect_and_estimate(const MapSummary& map, double eta,
                                             const wave::Numerology& numerology) {
  const auto sizes = wave::padded_sizes(numerology);
  if (map.kp != sizes.kp || map.mp != sizes.mp) {
    throw DimensionError("detect_and_estimate: map is " + std::to_string(map.kp) + "x" +
                         std::to_string(map.mp) + ", numerology expects " + std::to_string(sizes.kp) + "x" +
                         std::to_string(sizes.mp));
  }
  if (!(map.peak >= eta)) return std::nullopt;
  const Resolutions res = resolutions(numerology);
  Detection d;
  d.q = map.q;
  d.p = map.p;
  d.peak = map.peak;
  d.r_hat = static_cast<double>(map.q) * res.range_m;
  const long long signed_p = map.p > map.mp / 2 ? static_cast<long long>(map.p) - static_cast<long long>(map.mp)
                                                 : static_cast<long long>(map.p);
  d.v_hat = static_cast<double>(signed_p) * res.velocity_mps;
  return d;
}

std::optional<Detection> detect_and_estimate(const RangeDopplerMap& map, double eta,
                                             const wave::Numerology& numerology) {
  return detect_and_estimate(summarize(map), eta, numerology);
}

}  // namespace jsc::est
