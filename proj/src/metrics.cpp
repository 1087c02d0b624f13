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

#include "jsc/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <tuple>

#include "jsc/error.hpp"
#include "jsc/numkernel.hpp"

namespace jsc::metrics {

PointEstimate to_point(double range_m, double theta) {
  return {range_m * std::cos(theta), range_m * std::sin(theta)};
}

namespace {

bool point_less(const PointEstimate& a, const PointEstimate& b) {
  return std::tie(a.x, a.y) < std::tie(b.x, b.y);
}

// Orders the pair so that the computation does not depend on argument order.
bool swap_needed(std::span<const PointEstimate> a, std::span<const PointEstimate> b) {
  if (a.size() != b.size()) return a.size() < b.size();
  std::vector<PointEstimate> sa(a.begin(), a.end()), sb(b.begin(), b.end());
  std::sort(sa.begin(), sa.end(), point_less);
  std::sort(sb.begin(), sb.end(), point_less);
  return std::lexicographical_compare(sb.begin(), sb.end(), sa.begin(), sa.end(), point_less);
}

void require_nonempty(std::size_t n, const char* what) {
  if (n == 0) throw DomainError(std::string(what) + ": empty input");
}

}  // namespace

OspaResult ospa(std::span<const PointEstimate> truth, std::span<const PointEstimate> estimates,
                const OspaParams& params) {
  if (!(params.q >= 1.0) || !(params.cutoff > 0.0)) throw ConfigError("OSPA needs q >= 1 and cutoff > 0");
  // rows: larger set; columns: smaller set, padded with cutoff^q.
  auto larger = truth, smaller = estimates;
  if (swap_needed(truth, estimates)) std::swap(larger, smaller);
  const std::size_t n = larger.size(), m = smaller.size();
  if (n == 0) return {};

  const double pad = std::pow(params.cutoff, params.q);
  num::RealMatrix cost(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double c = pad;
      if (j < m) {
        const double d = std::hypot(larger[i].x - smaller[j].x, larger[i].y - smaller[j].y);
        c = std::pow(std::min(params.cutoff, d), params.q);
      }
      cost(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = c;
    }
  }
  const auto assignment = num::min_cost_assignment(cost);
  double loc_sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = assignment.permutation[i];
    if (j < m) loc_sum += cost(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }
  const double card_sum = pad * static_cast<double>(n - m);
  const double nn = static_cast<double>(n);
  OspaResult r;
  r.loc = std::pow(loc_sum / nn, 1.0 / params.q);
  r.card = std::pow(card_sum / nn, 1.0 / params.q);
  r.distance = std::min(params.cutoff, std::pow((loc_sum + card_sum) / nn, 1.0 / params.q));
  return r;
}

double rmse(std::span<const double> errors) {
  require_nonempty(errors.size(), "rmse");
  double s = 0.0;
  for (double e : errors) s += e * e;
  return std::sqrt(s / static_cast<double>(errors.size()));
}

double normalized_position_rmse(std::span<const PositionSample> samples) {
  require_nonempty(samples.size(), "normalized_position_rmse");
  double s = 0.0;
  for (const auto& p : samples) {
    if (!(p.range_m > 0.0)) throw DomainError("normalized_position_rmse: range must be positive");
    const double dx = p.estimate.x - p.truth.x, dy = p.estimate.y - p.truth.y;
    s += (dx * dx + dy * dy) / (p.range_m * p.range_m);
  }
  return std::sqrt(s / static_cast<double>(samples.size()));
}

double position_rmse(std::span<const PositionSample> samples) {
  require_nonempty(samples.size(), "position_rmse");
  double s = 0.0;
  for (const auto& p : samples) {
    const double dx = p.estimate.x - p.truth.x, dy = p.estimate.y - p.truth.y;
    s += dx * dx + dy * dy;
  }
  return std::sqrt(s / static_cast<double>(samples.size()));
}

double detection_probability(const std::vector<bool>& detected) {
  require_nonempty(detected.size(), "detection_probability");
  const auto hits = std::count(detected.begin(), detected.end(), true);
  return static_cast<double>(hits) / static_cast<double>(detected.size());
}

double mean_cardinality_error(std::span<const std::pair<std::size_t, std::size_t>> counts) {
  require_nonempty(counts.size(), "mean_cardinality_error");
  double s = 0.0;
  for (const auto& [l, l_hat] : counts) s += l > l_hat ? static_cast<double>(l - l_hat) : static_cast<double>(l_hat - l);
  return s / static_cast<double>(counts.size());
}

double mean(std::span<const double> values) {
  require_nonempty(values.size(), "mean");
  double s = 0.0;
  for (double v : values) s += v;
  return s / static_cast<double>(values.size());
}

std::vector<double> percentiles(std::span<const double> values, std::span<const double> levels) {
  require_nonempty(values.size(), "percentiles");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const auto n = static_cast<double>(sorted.size());
  std::vector<double> out;
  out.reserve(levels.size());
  for (double p : levels) {
    if (!(p > 0.0 && p <= 100.0)) throw ConfigError("percentile level must be in (0, 100]");
    // Small slack keeps exact products such as 20 * 100 / 100 on their integer rank.
    auto rank = static_cast<std::size_t>(std::ceil(p * n / 100.0 - 1e-9));
    rank = std::clamp<std::size_t>(rank, 1, sorted.size());
    out.push_back(sorted[rank - 1]);
  }
  return out;
}

std::vector<double> isotonic_nondecreasing(std::span<const double> values, std::span<const double> weights) {
  if (!weights.empty() && weights.size() != values.size())
    throw DimensionError("isotonic_nondecreasing: weights and values differ in length");
  struct Block {
    double mean, weight;
    std::size_t count;
  };
  std::vector<Block> blocks;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double w = weights.empty() ? 1.0 : weights[i];
    if (!(w > 0.0)) throw DomainError("isotonic_nondecreasing: weights must be positive");
    blocks.push_back({values[i], w, 1});
    while (blocks.size() > 1 && blocks[blocks.size() - 2].mean > blocks.back().mean) {
      const Block b = blocks.back();
      blocks.pop_back();
      Block& a = blocks.back();
      a.mean = (a.mean * a.weight + b.mean * b.weight) / (a.weight + b.weight);
      a.weight += b.weight;
      a.count += b.count;
    }
  }
  std::vector<double> out;
  out.reserve(values.size());
  for (const auto& b : blocks) out.insert(out.end(), b.count, b.mean);
  return out;
}

}  // namespace jsc::metrics
