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
#include <filesystem>
#include <optional>
#include <vector>

#include "jsc/config.hpp"
#include "jsc/estimator.hpp"
#include "jsc/pipeline.hpp"
#include "jsc/pruner.hpp"

namespace jsc::sim {

/// Threshold calibration for a scenario, shared by every run in the process.
/// When a cache file is set, matching entries are read from it and new ones appended.
est::ThresholdCalibration calibration_for(const ScenarioConfig& cfg);
void set_calibration_file(std::optional<std::filesystem::path> path);

// Uniform draws from the configured sector; with a UE it is drawn first and sits at index 0.
std::vector<chan::TargetTruth> draw_targets(const TargetSpec& spec, std::uint64_t seed);

// Element noise variance: N_0 K df (link budget) or 10^(-snr_db / 10) (snr-direct).
double noise_variance(const ScenarioConfig& cfg);

/// Fixes the radio, targets and their random amplitudes for one scan. The comm beam
/// follows the UE (target 0) when configured, otherwise it stays at comm_theta_deg.
est::SceneSetup make_scene(const ScenarioConfig& cfg, std::vector<chan::TargetTruth> targets, std::uint64_t seed);

// eta = factor * K Ms N_R sigma^2.
double detection_threshold(const ScenarioConfig& cfg, const est::SceneSetup& scene);

est::PipelineOptions pipeline_options(const ScenarioConfig& cfg, double eta);

struct ScanResult {
  std::vector<chan::TargetTruth> truth;
  std::vector<double> directions;              // rad
  std::vector<est::DirectionOutcome> outcomes; // one per direction
  std::vector<est::DetectionRecord> records;   // before pruning, in direction order
  prune::PrunedTargetSet pruned;
  double eta = 0.0;
};

/// Sweeps the sensing beam over the configured sector, running the per-direction
/// pipeline with an independent substream per direction, then prunes.
ScanResult run_scan(const est::SceneSetup& scene, const ScenarioConfig& cfg, double eta, std::uint64_t seed,
                    bool range_profiles = false, std::size_t workers = 1);

// Draws targets and channel from `seed`, calibrates the threshold and scans.
ScanResult run_scan(const ScenarioConfig& cfg, std::uint64_t seed, bool range_profiles = false);

}  // namespace jsc::sim
