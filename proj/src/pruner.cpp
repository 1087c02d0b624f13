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

#include "jsc/pruner.hpp"

#include <algorithm>
#include <cmath>

#include "jsc/error.hpp"

namespace jsc::prune {

void validate(const PruneParams& params) {
  if (!(params.eps_r >= 0.0) || !(params.eps_v >= 0.0))
    throw ConfigError("pruning windows eps_r and eps_v must be nonnegative");
}

PrunedTargetSet prune(std::vector<est::DetectionRecord> records, const PruneParams& params) {
  validate(params);
  std::stable_sort(records.begin(), records.end(), [](const auto& a, const auto& b) {
    if (a.peak_power != b.peak_power) return a.peak_power > b.peak_power;
    return a.direction_index < b.direction_index;
  });
  PrunedTargetSet out;
  for (const auto& rec : records) {
    const bool redundant = std::any_of(out.records.begin(), out.records.end(), [&](const auto& kept) {
      return std::abs(rec.r_hat - kept.r_hat) <= params.eps_r && std::abs(rec.v_hat - kept.v_hat) <= params.eps_v;
    });
    if (!redundant) out.records.push_back(rec);
  }
  out.l_hat = out.records.size();
  return out;
}

}  // namespace jsc::prune
