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

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <vector>

#include "jsc/error.hpp"
#include "jsc/estimator.hpp"
#include "jsc/parallel.hpp"
#include "jsc/rng.hpp"

namespace jsc::est {

namespace {


// Tail level used to anchor the Gumbel fit.
constexpr double kAnchorFraction = 0.1;

using CacheKey = std::tuple<std::size_t, std::size_t, std::size_t, std::size_t, double, std::size_t, std::uint64_t>;

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::map<CacheKey, ThresholdCalibration>& cache() {
  static std::map<CacheKey, ThresholdCalibration> c;
  return c;
}

// Nearest-rank quantile of an ascending sample.
double upper_quantile(const std::vector<double>& sorted, double tail) {
  const auto n = static_cast<double>(sorted.size());
  auto rank = static_cast<std::size_t>(std::ceil((1.0 - tail) * n));
  rank = std::clamp<std::size_t>(rank, 1, sorted.size());
  return sorted[rank - 1];
}

}  // namespace

double exponential_tail_threshold(double mu, double bins, double pfa) {
  if (!(pfa > 0.0 && pfa <= 1.0)) throw ConfigError("exponential_tail_threshold: pfa must be in (0, 1]");
  if (!(bins >= 1.0) || !(mu >= 0.0)) throw ConfigError("exponential_tail_threshold: invalid bins or mu");
  return mu * std::log(bins / pfa);
}

double noise_bin_mean(const wave::Numerology& numerology, std::size_t n_r, double noise_var) {
  return static_cast<double>(numerology.k) * static_cast<double>(numerology.ms) * static_cast<double>(n_r) *
         noise_var;
}

bool ThresholdCalibration::matches(const wave::Numerology& numerology, double pfa_wanted) const {
  const auto sizes = wave::padded_sizes(numerology);
  return k == numerology.k && ms == numerology.ms && kp == sizes.kp && mp == sizes.mp && pfa == pfa_wanted;
}

double noise_map_peak_ratio(PeriodogramEngine& engine, const wave::Numerology& numerology, std::uint64_t seed) {
  Rng rng(seed);
  ComplexMatrix g(static_cast<Eigen::Index>(numerology.k), static_cast<Eigen::Index>(numerology.ms));
  for (Eigen::Index j = 0; j < g.cols(); ++j) {
    for (Eigen::Index i = 0; i < g.rows(); ++i) g(i, j) = rng.complex_normal(1.0);
  }
  const MapSummary s = engine.summarize(g);
  return s.peak / noise_bin_mean(numerology, 1, 1.0);
}

ThresholdCalibration calibrate_threshold(double pfa, const wave::Numerology& numerology, std::size_t maps,
                                         std::uint64_t seed) {
  if (!(pfa > 0.0 && pfa <= 1.0)) throw ConfigError("calibrate_threshold: pfa must be in (0, 1]");
  const auto sizes = wave::padded_sizes(numerology);
  ThresholdCalibration cal;
  cal.pfa = pfa;
  cal.seed = seed;
  cal.k = numerology.k;
  cal.ms = numerology.ms;
  cal.kp = sizes.kp;
  cal.mp = sizes.mp;
  const double bins = static_cast<double>(sizes.kp) * static_cast<double>(sizes.mp);
  cal.initial_factor = std::log(bins / pfa);
  if (pfa == 1.0) {
    cal.factor = 0.0;
    cal.effective_bins = bins;
    return cal;
  }
  if (maps < 10) throw ConfigError("calibrate_threshold: need at least 10 noise maps");

  const CacheKey key{cal.k, cal.ms, cal.kp, cal.mp, pfa, maps, seed};
  {
    std::lock_guard<std::mutex> lock(cache_mutex());
    if (auto it = cache().find(key); it != cache().end()) return it->second;
  }

  const std::size_t workers = worker_count();
  std::vector<std::unique_ptr<PeriodogramEngine>> engines(workers);
  std::vector<double> ratios(maps);
  parallel_for(maps, workers, [&](std::size_t i, std::size_t w) {
    if (!engines[w]) engines[w] = std::make_unique<PeriodogramEngine>(numerology);
    ratios[i] = noise_map_peak_ratio(*engines[w], numerology, derive_seed(seed, {i}));
  });
  std::sort(ratios.begin(), ratios.end());

  cal.maps = maps;
  cal.empirical_factor = upper_quantile(ratios, pfa);
  // Gumbel max-of-exponentials: P(max/mu > t) = 1 - exp(-N e^{-t}); anchor ln N at an upper quantile.
  const double anchor = upper_quantile(ratios, kAnchorFraction);
  const double log_bins = anchor + std::log(-std::log1p(-kAnchorFraction));
  cal.effective_bins = std::exp(log_bins);
  cal.factor = log_bins - std::log(-std::log1p(-pfa));

  std::lock_guard<std::mutex> lock(cache_mutex());
  cache().emplace(key, cal);
  return cal;
}

}  // namespace jsc::est
