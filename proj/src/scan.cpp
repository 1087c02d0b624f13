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

#include "jsc/scan.hpp"

#include <cmath>
#include <fstream>
#include <memory>
#include <mutex>

#include <json.hpp>

#include "jsc/error.hpp"
#include "jsc/parallel.hpp"
#include "jsc/rng.hpp"

namespace jsc::sim {

namespace {

enum Stream : std::uint64_t { kTargets = 1, kChannel = 2, kDirections = 3 };

std::mutex& file_mutex() {
  static std::mutex m;
  return m;
}

std::optional<std::filesystem::path>& cache_path() {
  static std::optional<std::filesystem::path> p;
  return p;
}

nlohmann::json to_json(const est::ThresholdCalibration& c) {
  return {{"k", c.k},
          {"ms", c.ms},
          {"kp", c.kp},
          {"mp", c.mp},
          {"pfa", c.pfa},
          {"maps", c.maps},
          {"seed", c.seed},
          {"factor", c.factor},
          {"empirical_factor", c.empirical_factor},
          {"initial_factor", c.initial_factor},
          {"effective_bins", c.effective_bins}};
}

std::optional<est::ThresholdCalibration> from_file(const std::filesystem::path& path,
                                                   const est::ThresholdCalibration& key) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("calibration cache '" + path.string() + "' is not valid JSON: " + e.what());
  }
  for (const auto& e : doc.value("calibrations", nlohmann::json::array())) {
    if (e.at("k") == key.k && e.at("ms") == key.ms && e.at("kp") == key.kp && e.at("mp") == key.mp &&
        e.at("pfa").get<double>() == key.pfa && e.at("maps") == key.maps && e.at("seed") == key.seed) {
      est::ThresholdCalibration c = key;
      c.factor = e.at("factor");
      c.empirical_factor = e.at("empirical_factor");
      c.initial_factor = e.at("initial_factor");
      c.effective_bins = e.at("effective_bins");
      return c;
    }
  }
  return std::nullopt;
}

void append_to_file(const std::filesystem::path& path, const est::ThresholdCalibration& c) {
  nlohmann::json doc = {{"calibrations", nlohmann::json::array()}};
  if (std::ifstream in(path); in) {
    try {
      in >> doc;
    } catch (const nlohmann::json::exception&) {
      doc = {{"calibrations", nlohmann::json::array()}};
    }
  }
  doc["calibrations"].push_back(to_json(c));
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("cannot write calibration cache '" + path.string() + "'");
  out << doc.dump(2) << '\n';
}

}  // namespace

void set_calibration_file(std::optional<std::filesystem::path> path) {
  std::lock_guard<std::mutex> lock(file_mutex());
  cache_path() = std::move(path);
}

est::ThresholdCalibration calibration_for(const ScenarioConfig& cfg) {
  std::optional<std::filesystem::path> path;
  {
    std::lock_guard<std::mutex> lock(file_mutex());
    path = cache_path();
  }
  if (path && cfg.pfa < 1.0) {
    const auto sizes = wave::padded_sizes(cfg.numerology);
    est::ThresholdCalibration key;
    key.k = cfg.numerology.k;
    key.ms = cfg.numerology.ms;
    key.kp = sizes.kp;
    key.mp = sizes.mp;
    key.pfa = cfg.pfa;
    key.maps = cfg.calibration_maps;
    key.seed = cfg.calibration_seed;
    std::lock_guard<std::mutex> lock(file_mutex());
    if (auto hit = from_file(*path, key)) return *hit;
    const auto fresh = est::calibrate_threshold(cfg.pfa, cfg.numerology, cfg.calibration_maps, cfg.calibration_seed);
    append_to_file(*path, fresh);
    return fresh;
  }
  return est::calibrate_threshold(cfg.pfa, cfg.numerology, cfg.calibration_maps, cfg.calibration_seed);
}

std::vector<chan::TargetTruth> draw_targets(const TargetSpec& spec, std::uint64_t seed) {
  if (spec.mode == TargetMode::None) return {};
  if (spec.mode == TargetMode::Explicit) return spec.list;
  Rng rng(seed);
  std::vector<chan::TargetTruth> out;
  const std::size_t n = spec.count + (spec.ue ? 1 : 0);
  for (std::size_t i = 0; i < n; ++i) {
    chan::TargetTruth t;
    t.range_m = rng.uniform(spec.range_min_m, spec.range_max_m);
    t.theta = rng.uniform(spec.theta_min, spec.theta_max);
    t.radial_velocity = rng.uniform(spec.velocity_min_mps, spec.velocity_max_mps);
    t.rcs = spec.rcs_m2;
    out.push_back(t);
  }
  return out;
}

double noise_variance(const ScenarioConfig& cfg) {
  if (cfg.amplitude == chan::AmplitudeMode::SnrDirect) return std::pow(10.0, -cfg.snr_db / 10.0);
  return chan::noise_power(link_budget(cfg), cfg.numerology);
}

est::SceneSetup make_scene(const ScenarioConfig& cfg, std::vector<chan::TargetTruth> targets, std::uint64_t seed) {
  est::SceneSetup s;
  s.numerology = cfg.numerology;
  s.n_t = cfg.n_t;
  s.n_r = cfg.n_r;
  s.rho = cfg.rho;
  s.eirp_w = chan::LinkBudget::dbm_to_w(cfg.eirp_dbm);
  s.theta_comm = cfg.targets.ue && !targets.empty() ? targets.front().theta : cfg.theta_comm;
  s.realization = chan::realize_channel(targets, cfg.numerology, cfg.amplitude, link_budget(cfg), seed);
  s.targets = std::move(targets);
  s.si = cfg.si;
  s.noise_var = noise_variance(cfg);
  est::validate(s);
  return s;
}

double detection_threshold(const ScenarioConfig& cfg, const est::SceneSetup& scene) {
  const auto cal = calibration_for(cfg);
  return cal.threshold(est::noise_bin_mean(scene.numerology, scene.n_r, scene.noise_var));
}

est::PipelineOptions pipeline_options(const ScenarioConfig& cfg, double eta) {
  est::PipelineOptions o;
  o.synthesis = cfg.synthesis;
  o.music_window = music_window(cfg);
  o.music_step = cfg.music_step;
  o.eta = eta;
  return o;
}

ScanResult run_scan(const est::SceneSetup& scene, const ScenarioConfig& cfg, double eta, std::uint64_t seed,
                    bool range_profiles, std::size_t workers) {
  ScanResult out;
  out.truth = scene.targets;
  out.eta = eta;
  out.directions = beam::scan_directions(cfg.scan);
  out.outcomes.resize(out.directions.size());
  auto options = pipeline_options(cfg, eta);
  options.range_profile = range_profiles;

  std::vector<std::unique_ptr<est::PeriodogramEngine>> engines(std::max<std::size_t>(workers, 1));
  parallel_for(out.directions.size(), engines.size(), [&](std::size_t i, std::size_t w) {
    if (!engines[w]) engines[w] = std::make_unique<est::PeriodogramEngine>(scene.numerology);
    out.outcomes[i] = est::per_direction_pipeline(i, out.directions[i], scene, options,
                                                  derive_seed(seed, {kDirections, i}), *engines[w]);
  });
  for (const auto& o : out.outcomes)
    if (o.record) out.records.push_back(*o.record);
  out.pruned = prune::prune(out.records, prune_params(cfg));
  return out;
}

ScanResult run_scan(const ScenarioConfig& cfg, std::uint64_t seed, bool range_profiles) {
  validate(cfg);
  auto scene = make_scene(cfg, draw_targets(cfg.targets, derive_seed(seed, {kTargets})),
                          derive_seed(seed, {kChannel}));
  const double eta = detection_threshold(cfg, scene);
  return run_scan(scene, cfg, eta, seed, range_profiles, cfg.threads ? cfg.threads : worker_count());
}

}  // namespace jsc::sim
