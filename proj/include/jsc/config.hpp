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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jsc/arraybeam.hpp"
#include "jsc/channel.hpp"
#include "jsc/metrics.hpp"
#include "jsc/pipeline.hpp"
#include "jsc/pruner.hpp"
#include "jsc/waveform.hpp"

namespace jsc::sim {

enum class TargetMode { None, Random, Explicit };

struct TargetSpec {
  TargetMode mode = TargetMode::Random;
  std::size_t count = 9;        // random mode, excluding the UE
  double range_min_m = 20.0;
  double range_max_m = 85.0;
  double theta_min = beam::deg2rad(-60.0);
  double theta_max = beam::deg2rad(60.0);
  double velocity_min_mps = -20.0;
  double velocity_max_mps = 20.0;
  double rcs_m2 = 1.0;
  std::vector<chan::TargetTruth> list;  // explicit mode
  bool ue = false;                      // target 0 is the UE and the comm beam tracks it
};

enum class RmseGating { Detected, All };

struct ScenarioConfig {
  wave::Numerology numerology = wave::numerology_preset("NR400");
  std::size_t n_t = 50;
  std::size_t n_r = 50;
  double rho = 0.3;
  double eirp_dbm = 43.0;
  double noise_figure_db = 10.0;
  double temperature_k = 290.0;
  double rx_gain = 1.0;
  chan::AmplitudeMode amplitude = chan::AmplitudeMode::LinkBudget;
  double snr_db = -20.0;           // snr-direct mode
  double theta_comm = 0.0;         // rad; used when no UE is configured
  beam::ScanGrid scan{beam::deg2rad(-60.0), beam::deg2rad(60.0), 60};
  TargetSpec targets;
  chan::SelfInterference si;
  double pfa = 0.01;
  std::size_t calibration_maps = 2000;
  std::uint64_t calibration_seed = 0x5eed'ca1bULL;
  est::Synthesis synthesis = est::Synthesis::Compressed;
  double music_step = beam::deg2rad(0.01);
  std::optional<double> music_window;  // rad; default is the -10 dB beamwidth of n_r
  std::optional<double> eps_r_m;       // default: one range bin
  double eps_v_bins = 3.0;             // in Doppler bins unless eps_v_mps is given
  std::optional<double> eps_v_mps;
  metrics::OspaParams ospa;
  std::uint64_t seed = 1;
  std::size_t threads = 0;  // 0: JSC_SIM_THREADS or hardware
};

void validate(const ScenarioConfig& cfg);

double music_window(const ScenarioConfig& cfg);
prune::PruneParams prune_params(const ScenarioConfig& cfg);
chan::LinkBudget link_budget(const ScenarioConfig& cfg);

enum class ExperimentKind {
  RmseVsSnr,
  RmseVsSsir,
  RmseVsDistance,
  PdVsSnr,
  OspaVsNdir,
  CardinalityVsNdir,
  RangeAngleMap,
};

ExperimentKind parse_experiment_kind(const std::string& name);
std::string to_string(ExperimentKind kind);

struct ExperimentSpec {
  ExperimentKind kind = ExperimentKind::RmseVsSnr;
  std::size_t trials = 200;
  std::vector<double> snr_db;       // dB
  std::vector<double> ssir_db;      // dB
  std::vector<double> distance_m;
  std::vector<double> rho;
  std::vector<double> n_r;          // antenna counts (n_t follows n_r)
  std::vector<double> n_dir;
  RmseGating rmse_gating = RmseGating::Detected;
  std::optional<double> map_max_range_m;
};

void validate(const ExperimentSpec& spec);

struct RunConfig {
  ScenarioConfig scenario;
  ExperimentSpec experiment;
  std::map<std::string, std::string> resolved;  // section.key -> value, after defaults
};

/// Parses the INI-style configuration (sections radio, scan, targets, interference,
/// detection, pruning, ospa, experiment, run). Unknown keys are rejected.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::filesystem::path& path);

// "a:step:b" (inclusive) or a comma-separated list.
std::vector<double> parse_axis(const std::string& text);

}  // namespace jsc::sim
