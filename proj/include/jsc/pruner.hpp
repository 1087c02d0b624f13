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

#include "jsc/estimator.hpp"

namespace jsc::prune {

struct PruneParams {
  double eps_r = 0.0;  // m
  double eps_v = 0.0;  // m/s
};

void validate(const PruneParams& params);

struct PrunedTargetSet {
  std::vector<est::DetectionRecord> records;  // descending peak_power
  std::size_t l_hat = 0;
};

// Strongest record first (ties: lower direction index); a record survives unless an
// earlier survivor lies within eps_r in range and eps_v in velocity, both inclusive.
PrunedTargetSet prune(std::vector<est::DetectionRecord> records, const PruneParams& params);

}  // namespace jsc::prune
