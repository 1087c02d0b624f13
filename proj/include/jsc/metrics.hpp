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
#include <span>
#include <utility>
#include <vector>

namespace jsc::metrics {

struct PointEstimate {
  double x = 0.0;  // m
  double y = 0.0;  // m
};

// (r cos theta, r sin theta)
PointEstimate to_point(double range_m, double theta);

struct OspaParams {
  double q = 2.0;
  double cutoff = 10.0;  // m
};

struct OspaResult {
  double distance = 0.0;
  double loc = 0.0;
  double card = 0.0;
};

/// OSPA distance of order q with cutoff c between two finite point sets.
///
/// With m = min(|A|, |B|) and n = max(|A|, |B|):
///   loc^q  = min over assignments of sum min(c, d)^q / n
///   card^q = c^q (n - m) / n
///   distance^q = loc^q + card^q
/// Both empty gives 0. Symmetric bit for bit in its arguments.
OspaResult ospa(std::span<const PointEstimate> truth, std::span<const PointEstimate> estimates,
                const OspaParams& params = {});

// sqrt(mean(e^2)); DomainError when empty.
double rmse(std::span<const double> errors);

struct PositionSample {
  PointEstimate estimate;
  PointEstimate truth;
  double range_m = 0.0;
};

// sqrt(mean(||p_hat - p||^2 / r^2)).
double normalized_position_rmse(std::span<const PositionSample> samples);

// sqrt(mean(||p_hat - p||^2)).
double position_rmse(std::span<const PositionSample> samples);

double detection_probability(const std::vector<bool>& detected);

// mean |L - L_hat| over (L, L_hat) pairs.
double mean_cardinality_error(std::span<const std::pair<std::size_t, std::size_t>> counts);

double mean(std::span<const double> values);

// Nearest-rank percentiles (rank = ceil(P n / 100), at least 1) for each P in (0, 100].
std::vector<double> percentiles(std::span<const double> values, std::span<const double> levels);

// Weighted least-squares nondecreasing fit (pool adjacent violators).
std::vector<double> isotonic_nondecreasing(std::span<const double> values, std::span<const double> weights = {});

}  // namespace jsc::metrics
