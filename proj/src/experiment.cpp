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

#include "jsc/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>

#include "jsc/error.hpp"
#include "jsc/metrics.hpp"
#include "jsc/parallel.hpp"
#include "jsc/rng.hpp"

namespace jsc::sim {

namespace {

enum Stream : std::uint64_t { kTargets = 1, kChannel = 2, kDirections = 3 };

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::size_t workers_for(const ScenarioConfig& cfg) { return cfg.threads ? cfg.threads : worker_count(); }

// ---------------------------------------------------------------------------
// Single target, beam on the target
// ---------------------------------------------------------------------------

struct SingleTrial {
  bool detected = false;
  bool has_angle = false;
  double theta_err = 0.0;  // rad
  double r_err = 0.0;
  double v_err = 0.0;
  metrics::PositionSample position;
};

struct SinglePoint {
  ScenarioConfig cfg;
  std::optional<double> distance_m;
  std::vector<double> axis;  // values written in front of every row
};

SingleTrial single_trial(const SinglePoint& point, double eta, bool force_angle, std::uint64_t trial_seed,
                         est::PeriodogramEngine& engine) {
  const ScenarioConfig& cfg = point.cfg;
  const TargetSpec& spec = cfg.targets;
  auto targets = draw_targets(spec, derive_seed(trial_seed, {kTargets}));
  if (point.distance_m) targets.front().range_m = *point.distance_m;
  const chan::TargetTruth truth = targets.front();
  const auto scene = make_scene(cfg, targets, derive_seed(trial_seed, {kChannel}));

  auto options = pipeline_options(cfg, eta);
  options.force_angle = force_angle;
  const auto outcome =
      est::per_direction_pipeline(0, truth.theta, scene, options, derive_seed(trial_seed, {kDirections, 0}), engine);

  SingleTrial t;
  t.detected = outcome.record.has_value();
  // Periodogram argmax, used for r/v whether or not the threshold was crossed.
  const auto argmax = est::detect_and_estimate(outcome.map, -1.0, cfg.numerology);
  t.r_err = argmax->r_hat - truth.range_m;
  t.v_err = argmax->v_hat - truth.radial_velocity;
  if (outcome.doa) {
    t.has_angle = true;
    t.theta_err = outcome.doa->theta - truth.theta;
    t.position.estimate = metrics::to_point(argmax->r_hat, outcome.doa->theta);
    t.position.truth = metrics::to_point(truth.range_m, truth.theta);
    t.position.range_m = truth.range_m;
  }
  return t;
}

struct SingleSummary {
  std::size_t trials = 0, detections = 0, gated = 0;
  double rmse_theta = kNaN, rmse_r = kNaN, rmse_v = kNaN, rmse_pos = kNaN, nrmse_pos = kNaN;
};

SingleSummary summarize(const std::vector<SingleTrial>& trials, RmseGating gating) {
  SingleSummary s;
  s.trials = trials.size();
  std::vector<double> th, r, v;
  std::vector<metrics::PositionSample> pos;
  for (const auto& t : trials) {
    if (t.detected) ++s.detections;
    if (t.has_angle) th.push_back(t.theta_err);
    if (gating == RmseGating::All || t.detected) {
      r.push_back(t.r_err);
      v.push_back(t.v_err);
      if (t.has_angle) pos.push_back(t.position);
    }
  }
  s.gated = r.size();
  if (!th.empty()) s.rmse_theta = beam::rad2deg(metrics::rmse(th));
  if (!r.empty()) {
    s.rmse_r = metrics::rmse(r);
    s.rmse_v = metrics::rmse(v);
  }
  if (!pos.empty()) {
    s.rmse_pos = metrics::position_rmse(pos);
    s.nrmse_pos = metrics::normalized_position_rmse(pos);
  }
  return s;
}

std::vector<std::string> with_axis(const std::vector<std::string>& axis, std::vector<std::string> cols) {
  std::vector<std::string> out = axis;
  out.insert(out.end(), cols.begin(), cols.end());
  return out;
}

std::vector<double> row(const std::vector<double>& axis, std::initializer_list<double> values) {
  std::vector<double> out = axis;
  out.insert(out.end(), values.begin(), values.end());
  return out;
}

void run_single_target(const RunConfig& rc, ExperimentResult& result) {
  const auto& base = rc.scenario;
  const auto& spec = rc.experiment;
  const ExperimentKind kind = spec.kind;
  const bool force_angle = kind != ExperimentKind::PdVsSnr;

  std::vector<std::string> axis_names;
  std::vector<SinglePoint> points;
  for (double n_r : spec.n_r) {
    ScenarioConfig cfg = base;
    cfg.n_r = cfg.n_t = static_cast<std::size_t>(n_r);
    cfg.targets.mode = TargetMode::Random;
    cfg.targets.count = 1;
    cfg.targets.ue = false;
    if (kind == ExperimentKind::RmseVsSnr || kind == ExperimentKind::PdVsSnr) {
      axis_names = {"n_r", "snr_db"};
      cfg.amplitude = chan::AmplitudeMode::SnrDirect;
      for (double snr : spec.snr_db) {
        SinglePoint p{cfg, std::nullopt, {n_r, snr}};
        p.cfg.snr_db = snr;
        points.push_back(p);
      }
    } else if (kind == ExperimentKind::RmseVsSsir) {
      axis_names = {"n_r", "ssir_db"};
      cfg.amplitude = chan::AmplitudeMode::SnrDirect;
      for (double ssir : spec.ssir_db) {
        SinglePoint p{cfg, std::nullopt, {n_r, ssir}};
        p.cfg.si.ssir_db = ssir;
        points.push_back(p);
      }
    } else {
      axis_names = {"n_r", "rho", "distance_m"};
      cfg.amplitude = chan::AmplitudeMode::LinkBudget;
      for (double rho : spec.rho)
        for (double d : spec.distance_m) {
          SinglePoint p{cfg, d, {n_r, rho, d}};
          p.cfg.rho = rho;
          points.push_back(p);
        }
    }
  }
  for (auto& p : points) validate(p.cfg);

  const std::size_t n_trials = spec.trials;
  const std::size_t workers = workers_for(base);
  std::vector<std::unique_ptr<est::PeriodogramEngine>> engines(workers);
  std::vector<std::vector<SingleTrial>> outcomes(points.size(), std::vector<SingleTrial>(n_trials));
  std::vector<double> eta(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto cal = calibration_for(points[i].cfg);
    result.calibration = cal;
    eta[i] = cal.threshold(est::noise_bin_mean(points[i].cfg.numerology, points[i].cfg.n_r,
                                               noise_variance(points[i].cfg)));
  }
  parallel_for(points.size() * n_trials, workers, [&](std::size_t job, std::size_t w) {
    const std::size_t i = job / n_trials, t = job % n_trials;
    if (!engines[w]) engines[w] = std::make_unique<est::PeriodogramEngine>(base.numerology);
    outcomes[i][t] = single_trial(points[i], eta[i], force_angle, derive_seed(base.seed, {t}), *engines[w]);
  });

  ResultTable pd{"detection_probability", with_axis(axis_names, {"trials", "detections", "pd", "pd_isotonic"}), {}};
  ResultTable th{"rmse_theta", with_axis(axis_names, {"trials", "rmse_theta_deg", "beamwidth_deg"}), {}};
  ResultTable rr{"rmse_range", with_axis(axis_names, {"samples", "rmse_range_m"}), {}};
  ResultTable vv{"rmse_velocity", with_axis(axis_names, {"samples", "rmse_velocity_mps"}), {}};
  ResultTable pp{"rmse_position", with_axis(axis_names, {"samples", "rmse_position_m", "nrmse_position"}), {}};

  std::vector<SingleSummary> sums;
  for (const auto& o : outcomes) sums.push_back(summarize(o, spec.rmse_gating));
  // Isotonic fit of P_D along the sweep, separately for each antenna count.
  std::vector<double> iso(points.size());
  for (std::size_t begin = 0; begin < points.size();) {
    std::size_t end = begin;
    while (end < points.size() && points[end].axis[0] == points[begin].axis[0]) ++end;
    std::vector<double> pdv;
    for (std::size_t i = begin; i < end; ++i)
      pdv.push_back(static_cast<double>(sums[i].detections) / static_cast<double>(sums[i].trials));
    const auto fit = metrics::isotonic_nondecreasing(pdv);
    std::copy(fit.begin(), fit.end(), iso.begin() + static_cast<std::ptrdiff_t>(begin));
    begin = end;
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& s = sums[i];
    const auto& a = points[i].axis;
    pd.rows.push_back(row(a, {double(s.trials), double(s.detections),
                              double(s.detections) / double(s.trials), iso[i]}));
    th.rows.push_back(row(a, {double(s.trials), s.rmse_theta, beam::rad2deg(music_window(points[i].cfg))}));
    rr.rows.push_back(row(a, {double(s.gated), s.rmse_r}));
    vv.rows.push_back(row(a, {double(s.gated), s.rmse_v}));
    pp.rows.push_back(row(a, {double(s.gated), s.rmse_pos, s.nrmse_pos}));
  }
  result.tables.push_back(pd);
  if (force_angle) {
    result.tables.push_back(th);
    result.tables.push_back(rr);
    result.tables.push_back(vv);
    result.tables.push_back(pp);
  }
}

// ---------------------------------------------------------------------------
// Multi-target scans
// ---------------------------------------------------------------------------

struct MultiTrial {
  double ospa = 0.0, loc = 0.0, card = 0.0;
  std::size_t l_true = 0, l_hat = 0, records = 0;
};

std::vector<metrics::PointEstimate> truth_points(const std::vector<chan::TargetTruth>& truth) {
  std::vector<metrics::PointEstimate> out;
  for (const auto& t : truth) out.push_back(metrics::to_point(t.range_m, t.theta));
  return out;
}

std::vector<metrics::PointEstimate> estimate_points(const prune::PrunedTargetSet& set) {
  std::vector<metrics::PointEstimate> out;
  for (const auto& r : set.records) out.push_back(metrics::to_point(r.r_hat, r.theta_hat));
  return out;
}

void run_multi_target(const RunConfig& rc, ExperimentResult& result) {
  const auto& base = rc.scenario;
  const auto& spec = rc.experiment;
  struct Point {
    ScenarioConfig cfg;
    std::vector<double> axis;
  };
  std::vector<Point> points;
  for (double rho : spec.rho)
    for (double nd : spec.n_dir) {
      Point p{base, {rho, nd}};
      p.cfg.rho = rho;
      p.cfg.scan.ndir = static_cast<std::size_t>(nd);
      validate(p.cfg);
      points.push_back(p);
    }
  for (const auto& p : points) result.calibration = calibration_for(p.cfg);

  const std::size_t n_trials = spec.trials;
  std::vector<std::vector<MultiTrial>> outcomes(points.size(), std::vector<MultiTrial>(n_trials));
  parallel_for(points.size() * n_trials, workers_for(base), [&](std::size_t job, std::size_t) {
    const std::size_t i = job / n_trials, t = job % n_trials;
    ScenarioConfig cfg = points[i].cfg;
    cfg.threads = 1;
    const auto scan = run_scan(cfg, derive_seed(base.seed, {t}));
    const auto truth = truth_points(scan.truth);
    const auto est_pts = estimate_points(scan.pruned);
    const auto o = metrics::ospa(truth, est_pts, cfg.ospa);
    outcomes[i][t] = {o.distance, o.loc, o.card, scan.truth.size(), scan.pruned.l_hat, scan.records.size()};
  });

  const std::vector<std::string> axis_names{"rho", "n_dir"};
  ResultTable ospa{"ospa", with_axis(axis_names, {"trials", "mean_ospa_m", "p20_ospa_m", "p80_ospa_m"}), {}};
  ResultTable loc{"ospa_localization", with_axis(axis_names, {"trials", "mean_loc_m", "mean_card_m"}), {}};
  ResultTable card{"cardinality_error",
                   with_axis(axis_names, {"trials", "mean_cardinality_error", "mean_l_hat", "mean_records"}), {}};
  const std::vector<double> levels{20.0, 80.0};
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::vector<double> d, l, c, lhat, recs;
    std::vector<std::pair<std::size_t, std::size_t>> counts;
    for (const auto& t : outcomes[i]) {
      d.push_back(t.ospa);
      l.push_back(t.loc);
      c.push_back(t.card);
      lhat.push_back(static_cast<double>(t.l_hat));
      recs.push_back(static_cast<double>(t.records));
      counts.emplace_back(t.l_true, t.l_hat);
    }
    const auto pct = metrics::percentiles(d, levels);
    const auto& a = points[i].axis;
    const double n = static_cast<double>(n_trials);
    ospa.rows.push_back(row(a, {n, metrics::mean(d), pct[0], pct[1]}));
    loc.rows.push_back(row(a, {n, metrics::mean(l), metrics::mean(c)}));
    card.rows.push_back(row(a, {n, metrics::mean_cardinality_error(counts), metrics::mean(lhat), metrics::mean(recs)}));
  }
  if (spec.kind == ExperimentKind::OspaVsNdir) result.tables.push_back(ospa);
  result.tables.push_back(card);
  result.tables.push_back(loc);
}

// ---------------------------------------------------------------------------
// Single scan with its range-angle map
// ---------------------------------------------------------------------------

ResultTable records_table(const std::string& name, const std::vector<est::DetectionRecord>& records,
                          const std::vector<double>& directions) {
  ResultTable t{name,
                {"direction_index", "beam_theta_deg", "r_hat_m", "v_hat_mps", "theta_hat_deg", "peak_power",
                 "music_peak", "model_order"},
                {}};
  for (const auto& r : records)
    t.rows.push_back({double(r.direction_index), beam::rad2deg(directions[r.direction_index]), r.r_hat, r.v_hat,
                      beam::rad2deg(r.theta_hat), r.peak_power, r.music_peak, double(r.model_order)});
  return t;
}

void run_map(const RunConfig& rc, ExperimentResult& result) {
  const auto& cfg = rc.scenario;
  result.calibration = calibration_for(cfg);
  const auto scan = run_scan(cfg, derive_seed(cfg.seed, {0}), true);
  result.map = range_angle_map(scan, cfg.numerology, rc.experiment.map_max_range_m);

  ResultTable truth{"truth", {"index", "range_m", "theta_deg", "velocity_mps", "rcs_m2", "is_ue"}, {}};
  for (std::size_t i = 0; i < scan.truth.size(); ++i) {
    const auto& t = scan.truth[i];
    truth.rows.push_back({double(i), t.range_m, beam::rad2deg(t.theta), t.radial_velocity, t.rcs,
                          cfg.targets.ue && i == 0 ? 1.0 : 0.0});
  }
  const auto o = metrics::ospa(truth_points(scan.truth), estimate_points(scan.pruned), cfg.ospa);
  const double l = static_cast<double>(scan.truth.size()), lh = static_cast<double>(scan.pruned.l_hat);
  ResultTable summary{"scan_summary",
                      {"n_dir", "targets", "records", "l_hat", "cardinality_error", "ospa_m", "ospa_loc_m",
                       "ospa_card_m", "eta"},
                      {{double(cfg.scan.ndir), l, double(scan.records.size()), lh, std::abs(l - lh), o.distance, o.loc,
                        o.card, scan.eta}}};
  result.tables.push_back(summary);
  result.tables.push_back(truth);
  result.tables.push_back(records_table("detections", scan.records, scan.directions));
  result.tables.push_back(records_table("pruned", scan.pruned.records, scan.directions));
}

}  // namespace

RangeAngleMap range_angle_map(const ScanResult& scan, const wave::Numerology& numerology,
                              std::optional<double> max_range_m) {
  const auto res = est::resolutions(numerology);
  const auto kp = wave::padded_sizes(numerology).kp;
  std::size_t cols = kp;
  if (max_range_m) cols = std::min<std::size_t>(kp, static_cast<std::size_t>(std::floor(*max_range_m / res.range_m)) + 1);
  RangeAngleMap map;
  map.db.resize(static_cast<Eigen::Index>(scan.outcomes.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t q = 0; q < cols; ++q) map.range_m.push_back(static_cast<double>(q) * res.range_m);
  double peak = 0.0;
  for (std::size_t i = 0; i < scan.outcomes.size(); ++i) {
    const auto& profile = scan.outcomes[i].map.range_profile;
    if (profile.size() != kp) throw DimensionError("range_angle_map: scan was run without range profiles");
    map.theta_deg.push_back(beam::rad2deg(scan.directions[i]));
    for (std::size_t q = 0; q < cols; ++q) {
      map.db(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(q)) = profile[q];
      peak = std::max(peak, profile[q]);
    }
  }
  for (Eigen::Index i = 0; i < map.db.rows(); ++i)
    for (Eigen::Index j = 0; j < map.db.cols(); ++j) {
      const double v = map.db(i, j);
      map.db(i, j) = (peak > 0.0 && v > 0.0) ? std::max(kMapFloorDb, 10.0 * std::log10(v / peak)) : kMapFloorDb;
    }
  return map;
}

ExperimentResult run_experiment(const RunConfig& rc) {
  validate(rc.scenario);
  validate(rc.experiment);
  ExperimentResult result;
  result.kind = rc.experiment.kind;
  switch (rc.experiment.kind) {
    case ExperimentKind::RmseVsSnr:
    case ExperimentKind::RmseVsSsir:
    case ExperimentKind::RmseVsDistance:
    case ExperimentKind::PdVsSnr:
      run_single_target(rc, result);
      break;
    case ExperimentKind::OspaVsNdir:
    case ExperimentKind::CardinalityVsNdir:
      run_multi_target(rc, result);
      break;
    case ExperimentKind::RangeAngleMap:
      run_map(rc, result);
      break;
  }
  return result;
}

}  // namespace jsc::sim
