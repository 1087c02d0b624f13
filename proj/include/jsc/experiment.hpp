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

#include <optional>
#include <string>
#include <vector>

#include "jsc/config.hpp"
#include "jsc/scan.hpp"

namespace jsc::sim {

struct ResultTable {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

// Rows are sensing directions, columns range bins; peak-normalized dB floored at -60.
struct RangeAngleMap {
  std::vector<double> theta_deg;
  std::vector<double> range_m;
  num::RealMatrix db;
};

inline constexpr double kMapFloorDb = -60.0;

RangeAngleMap range_angle_map(const ScanResult& scan, const wave::Numerology& numerology,
                              std::optional<double> max_range_m);

struct ExperimentResult {
  ExperimentKind kind = ExperimentKind::RmseVsSnr;
  std::vector<ResultTable> tables;
  std::optional<RangeAngleMap> map;
  std::optional<est::ThresholdCalibration> calibration;
};

/// Runs every point of the configured sweep with `trials` Monte Carlo trials each.
/// Trial t uses the substream (seed, t) at every sweep point, so neighbouring points
/// share targets and noise draws.
ExperimentResult run_experiment(const RunConfig& rc);

}  // namespace jsc::sim
