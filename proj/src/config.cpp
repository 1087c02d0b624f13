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

#include "jsc/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "jsc/error.hpp"

namespace jsc::sim {

namespace pt = boost::property_tree;

namespace {

const std::map<std::string, std::set<std::string>>& schema() {
  static const std::map<std::string, std::set<std::string>> s{
      {"radio",
       {"numerology", "fc_hz", "delta_f_hz", "subcarriers", "symbols_per_frame", "symbols_per_direction",
        "doppler_padding", "n_t", "n_r", "rho", "eirp_dbm", "noise_figure_db", "temperature_k", "rx_gain",
        "amplitude", "snr_db", "comm_theta_deg"}},
      {"scan", {"theta_start_deg", "theta_end_deg", "n_dir"}},
      {"targets",
       {"mode", "count", "range_min_m", "range_max_m", "theta_min_deg", "theta_max_deg", "velocity_min_mps",
        "velocity_max_mps", "rcs_m2", "list", "ue"}},
      {"interference", {"ssir_db"}},
      {"detection", {"pfa", "calibration_maps", "calibration_seed", "synthesis", "music_step_deg",
                     "music_window_deg"}},
      {"pruning", {"eps_r_m", "eps_v_bins", "eps_v_mps"}},
      {"ospa", {"order", "cutoff_m"}},
      {"experiment", {"kind", "trials", "snr_db", "ssir_db", "distance_m", "rho", "n_r", "n_dir", "rmse_gating",
                      "map_max_range_m"}},
      {"run", {"seed", "threads"}},
  };
  return s;
}

std::string trim(std::string s) {
  auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

double to_double(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc{} || ptr != t.data() + t.size() || !std::isfinite(v))
    throw ConfigError(key + ": expected a number, got '" + text + "'");
  return v;
}

std::uint64_t to_u64(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  std::uint64_t v = 0;
  int base = 10;
  std::size_t skip = 0;
  if (t.size() > 2 && t[0] == '0' && (t[1] == 'x' || t[1] == 'X')) {
    base = 16;
    skip = 2;
  }
  const auto [ptr, ec] = std::from_chars(t.data() + skip, t.data() + t.size(), v, base);
  if (ec != std::errc{} || ptr != t.data() + t.size() || t.size() == skip)
    throw ConfigError(key + ": expected a nonnegative integer, got '" + text + "'");
  return v;
}

std::size_t to_count(const std::string& key, const std::string& text) {
  return static_cast<std::size_t>(to_u64(key, text));
}

bool to_bool(const std::string& key, const std::string& text) {
  const std::string t = lower(trim(text));
  if (t == "true" || t == "yes" || t == "on" || t == "1") return true;
  if (t == "false" || t == "no" || t == "off" || t == "0") return false;
  throw ConfigError(key + ": expected true or false, got '" + text + "'");
}

bool is_auto(const std::string& text) {
  const std::string t = lower(trim(text));
  return t == "auto" || t == "off" || t == "none" || t.empty();
}

std::vector<chan::TargetTruth> parse_target_list(const std::string& text, double default_rcs) {
  std::vector<chan::TargetTruth> out;
  std::stringstream entries(text);
  std::string entry;
  while (std::getline(entries, entry, ';')) {
    if (trim(entry).empty()) continue;
    std::vector<double> f;
    std::stringstream fields(entry);
    std::string field;
    while (std::getline(fields, field, ',')) f.push_back(to_double("targets.list", field));
    if (f.size() != 3 && f.size() != 4)
      throw ConfigError("targets.list: each target is 'range_m, theta_deg, velocity_mps[, rcs_m2]'");
    out.push_back({f[0], beam::deg2rad(f[1]), f[2], f.size() == 4 ? f[3] : default_rcs});
  }
  return out;
}

std::string format(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string format_axis(const std::vector<double>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? "," : "") + format(values[i]);
  return s;
}

std::vector<double> default_axis(const std::vector<double>& given, std::vector<double> fallback) {
  return given.empty() ? fallback : given;
}

}  // namespace

std::vector<double> parse_axis(const std::string& text) {
  const std::string t = trim(text);
  if (t.empty()) return {};
  if (t.find(':') != std::string::npos) {
    std::vector<double> parts;
    std::stringstream ss(t);
    std::string p;
    while (std::getline(ss, p, ':')) parts.push_back(to_double("axis", p));
    if (parts.size() != 3) throw ConfigError("axis '" + text + "' must be start:step:stop");
    const double start = parts[0], step = parts[1], stop = parts[2];
    if (step == 0.0 || (stop - start) / step < 0.0)
      throw ConfigError("axis '" + text + "' has a step that never reaches the stop value");
    const auto n = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    if (n > 100000) throw ConfigError("axis '" + text + "' has too many points");
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = start + static_cast<double>(i) * step;
    return out;
  }
  std::vector<double> out;
  std::stringstream ss(t);
  std::string p;
  while (std::getline(ss, p, ',')) out.push_back(to_double("axis", p));
  return out;
}

void validate(const ScenarioConfig& c) {
  if (c.n_t < 1 || c.n_r < 2) throw ConfigError("radio: n_t must be >= 1 and n_r >= 2");
  if (!(c.rho >= 0.0 && c.rho <= 1.0)) throw ConfigError("radio.rho must lie in [0, 1]");
  if (c.amplitude == chan::AmplitudeMode::SnrDirect && !(c.rho > 0.0))
    throw ConfigError("radio.rho must be positive in snr-direct mode");
  if (!std::isfinite(c.eirp_dbm) || !std::isfinite(c.noise_figure_db) || !(c.temperature_k > 0.0) ||
      !(c.rx_gain > 0.0))
    throw ConfigError("radio: link-budget fields must be finite and positive where physical");
  if (c.scan.ndir < 2) throw ConfigError("scan.n_dir must be at least 2");
  const double limit = beam::deg2rad(60.0) + 1e-12;
  if (std::abs(c.scan.theta_start) > limit || std::abs(c.scan.theta_end) > limit ||
      c.scan.theta_end < c.scan.theta_start)
    throw ConfigError("scan: sector must satisfy -60 <= start <= end <= 60 degrees");
  if (std::abs(c.theta_comm) > limit) throw ConfigError("radio.comm_theta_deg must lie in [-60, 60]");
  const auto& t = c.targets;
  if (!(t.range_min_m > 0.0) || t.range_max_m < t.range_min_m) throw ConfigError("targets: invalid range interval");
  if (std::abs(t.theta_min) > limit || std::abs(t.theta_max) > limit || t.theta_max < t.theta_min)
    throw ConfigError("targets: angle interval must lie within [-60, 60] degrees");
  if (t.velocity_max_mps < t.velocity_min_mps) throw ConfigError("targets: invalid velocity interval");
  if (!(t.rcs_m2 > 0.0)) throw ConfigError("targets.rcs_m2 must be positive");
  std::size_t count = 0;
  if (t.mode == TargetMode::Random) count = t.count + (t.ue ? 1 : 0);
  if (t.mode == TargetMode::Explicit) {
    for (const auto& x : t.list) chan::validate(x);
    count = t.list.size();
    if (t.ue && t.list.empty()) throw ConfigError("targets.ue needs at least one listed target");
  }
  if (t.mode == TargetMode::None && t.ue) throw ConfigError("targets.ue needs targets");
  if (count >= c.n_r)
    throw ConfigError("number of targets (" + std::to_string(count) +
                      ") must be less than the number of sensing array elements (" + std::to_string(c.n_r) + ")");
  if (!(c.pfa > 0.0 && c.pfa <= 1.0)) throw ConfigError("detection.pfa must lie in (0, 1]");
  if (c.calibration_maps < 10) throw ConfigError("detection.calibration_maps must be at least 10");
  if (!(c.music_step > 0.0)) throw ConfigError("detection.music_step_deg must be positive");
  if (c.music_window && !(*c.music_window > 0.0)) throw ConfigError("detection.music_window_deg must be positive");
  if (c.eps_r_m && !(*c.eps_r_m >= 0.0)) throw ConfigError("pruning.eps_r_m must be nonnegative");
  if (!(c.eps_v_bins >= 0.0)) throw ConfigError("pruning.eps_v_bins must be nonnegative");
  if (c.eps_v_mps && !(*c.eps_v_mps >= 0.0)) throw ConfigError("pruning.eps_v_mps must be nonnegative");
  if (!(c.ospa.q >= 1.0) || !(c.ospa.cutoff > 0.0)) throw ConfigError("ospa: order >= 1 and cutoff_m > 0");
}

double music_window(const ScenarioConfig& cfg) {
  return cfg.music_window ? *cfg.music_window : beam::beamwidth_minus10db(cfg.n_r);
}

prune::PruneParams prune_params(const ScenarioConfig& cfg) {
  const auto res = est::resolutions(cfg.numerology);
  return {cfg.eps_r_m ? *cfg.eps_r_m : res.range_m,
          cfg.eps_v_mps ? *cfg.eps_v_mps : cfg.eps_v_bins * res.velocity_mps};
}

chan::LinkBudget link_budget(const ScenarioConfig& cfg) {
  chan::LinkBudget b;
  b.eirp_w = chan::LinkBudget::dbm_to_w(cfg.eirp_dbm);
  b.g_rx = cfg.rx_gain;
  b.noise_figure_db = cfg.noise_figure_db;
  b.t0_k = cfg.temperature_k;
  b.rho = cfg.rho;
  return b;
}

ExperimentKind parse_experiment_kind(const std::string& name) {
  static const std::map<std::string, ExperimentKind> kinds{
      {"rmse_vs_snr", ExperimentKind::RmseVsSnr},
      {"rmse_vs_ssir", ExperimentKind::RmseVsSsir},
      {"rmse_vs_distance", ExperimentKind::RmseVsDistance},
      {"pd_vs_snr", ExperimentKind::PdVsSnr},
      {"ospa_vs_ndir", ExperimentKind::OspaVsNdir},
      {"cardinality_vs_ndir", ExperimentKind::CardinalityVsNdir},
      {"range_angle_map", ExperimentKind::RangeAngleMap},
  };
  const auto it = kinds.find(lower(trim(name)));
  if (it == kinds.end()) throw ConfigError("unknown experiment kind '" + name + "'");
  return it->second;
}

std::string to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::RmseVsSnr: return "rmse_vs_snr";
    case ExperimentKind::RmseVsSsir: return "rmse_vs_ssir";
    case ExperimentKind::RmseVsDistance: return "rmse_vs_distance";
    case ExperimentKind::PdVsSnr: return "pd_vs_snr";
    case ExperimentKind::OspaVsNdir: return "ospa_vs_ndir";
    case ExperimentKind::CardinalityVsNdir: return "cardinality_vs_ndir";
    case ExperimentKind::RangeAngleMap: return "range_angle_map";
  }
  return "unknown";
}

void validate(const ExperimentSpec& s) {
  if (s.trials < 1) throw ConfigError("experiment.trials must be at least 1");
  for (double n : s.n_r)
    if (!(n >= 2.0) || n != std::floor(n)) throw ConfigError("experiment.n_r entries must be integers >= 2");
  for (double n : s.n_dir)
    if (!(n >= 2.0) || n != std::floor(n)) throw ConfigError("experiment.n_dir entries must be integers >= 2");
  for (double d : s.distance_m)
    if (!(d > 0.0)) throw ConfigError("experiment.distance_m entries must be positive");
  for (double r : s.rho)
    if (!(r > 0.0 && r <= 1.0)) throw ConfigError("experiment.rho entries must lie in (0, 1]");
  if (s.map_max_range_m && !(*s.map_max_range_m > 0.0)) throw ConfigError("experiment.map_max_range_m must be positive");
}

RunConfig parse_config(const std::string& text) {
  pt::ptree tree;
  std::istringstream in(text);
  try {
    pt::ini_parser::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(std::string("config: ") + e.message() + " (line " + std::to_string(e.line()) + ")");
  }

  for (const auto& [section, body] : tree) {
    const auto it = schema().find(section);
    if (it == schema().end()) throw ConfigError("config: unknown section [" + section + "]");
    if (body.empty() && !body.data().empty()) throw ConfigError("config: key '" + section + "' outside a section");
    for (const auto& [key, value] : body)
      if (!it->second.count(key)) throw ConfigError("config: unknown key '" + key + "' in [" + section + "]");
  }
  auto get = [&](const std::string& path) -> std::optional<std::string> {
    if (auto v = tree.get_optional<std::string>(pt::ptree::path_type(path, '.'))) return trim(*v);
    return std::nullopt;
  };

  RunConfig rc;
  ScenarioConfig& c = rc.scenario;
  ExperimentSpec& e = rc.experiment;

  const std::string preset = get("radio.numerology").value_or("NR400");
  if (lower(preset) == "custom") {
    auto need = [&](const std::string& key) {
      auto v = get("radio." + key);
      if (!v) throw ConfigError("radio." + key + " is required for a custom numerology");
      return *v;
    };
    c.numerology = wave::make_numerology(
        "custom", to_double("radio.fc_hz", need("fc_hz")), to_double("radio.delta_f_hz", need("delta_f_hz")),
        to_count("radio.subcarriers", need("subcarriers")),
        to_count("radio.symbols_per_frame", need("symbols_per_frame")),
        to_count("radio.symbols_per_direction", need("symbols_per_direction")),
        to_count("radio.doppler_padding", get("radio.doppler_padding").value_or("1")));
  } else {
    c.numerology = wave::numerology_preset(preset);
  }
  if (auto v = get("radio.n_t")) c.n_t = to_count("radio.n_t", *v);
  if (auto v = get("radio.n_r")) c.n_r = to_count("radio.n_r", *v);
  if (auto v = get("radio.rho")) c.rho = to_double("radio.rho", *v);
  if (auto v = get("radio.eirp_dbm")) c.eirp_dbm = to_double("radio.eirp_dbm", *v);
  if (auto v = get("radio.noise_figure_db")) c.noise_figure_db = to_double("radio.noise_figure_db", *v);
  if (auto v = get("radio.temperature_k")) c.temperature_k = to_double("radio.temperature_k", *v);
  if (auto v = get("radio.rx_gain")) c.rx_gain = to_double("radio.rx_gain", *v);
  if (auto v = get("radio.amplitude")) {
    const std::string m = lower(*v);
    if (m == "link-budget") c.amplitude = chan::AmplitudeMode::LinkBudget;
    else if (m == "snr-direct") c.amplitude = chan::AmplitudeMode::SnrDirect;
    else throw ConfigError("radio.amplitude must be link-budget or snr-direct");
  }
  if (auto v = get("radio.snr_db")) c.snr_db = to_double("radio.snr_db", *v);
  if (auto v = get("radio.comm_theta_deg")) c.theta_comm = beam::deg2rad(to_double("radio.comm_theta_deg", *v));

  if (auto v = get("scan.theta_start_deg")) c.scan.theta_start = beam::deg2rad(to_double("scan.theta_start_deg", *v));
  if (auto v = get("scan.theta_end_deg")) c.scan.theta_end = beam::deg2rad(to_double("scan.theta_end_deg", *v));
  if (auto v = get("scan.n_dir")) c.scan.ndir = to_count("scan.n_dir", *v);

  auto& t = c.targets;
  if (auto v = get("targets.mode")) {
    const std::string m = lower(*v);
    if (m == "none") t.mode = TargetMode::None;
    else if (m == "random") t.mode = TargetMode::Random;
    else if (m == "explicit") t.mode = TargetMode::Explicit;
    else throw ConfigError("targets.mode must be none, random or explicit");
  }
  if (auto v = get("targets.count")) t.count = to_count("targets.count", *v);
  if (auto v = get("targets.range_min_m")) t.range_min_m = to_double("targets.range_min_m", *v);
  if (auto v = get("targets.range_max_m")) t.range_max_m = to_double("targets.range_max_m", *v);
  if (auto v = get("targets.theta_min_deg")) t.theta_min = beam::deg2rad(to_double("targets.theta_min_deg", *v));
  if (auto v = get("targets.theta_max_deg")) t.theta_max = beam::deg2rad(to_double("targets.theta_max_deg", *v));
  if (auto v = get("targets.velocity_min_mps")) t.velocity_min_mps = to_double("targets.velocity_min_mps", *v);
  if (auto v = get("targets.velocity_max_mps")) t.velocity_max_mps = to_double("targets.velocity_max_mps", *v);
  if (auto v = get("targets.rcs_m2")) t.rcs_m2 = to_double("targets.rcs_m2", *v);
  if (auto v = get("targets.list")) t.list = parse_target_list(*v, t.rcs_m2);
  if (auto v = get("targets.ue")) t.ue = to_bool("targets.ue", *v);

  if (auto v = get("interference.ssir_db"); v && !is_auto(*v))
    c.si.ssir_db = to_double("interference.ssir_db", *v);

  if (auto v = get("detection.pfa")) c.pfa = to_double("detection.pfa", *v);
  if (auto v = get("detection.calibration_maps")) c.calibration_maps = to_count("detection.calibration_maps", *v);
  if (auto v = get("detection.calibration_seed")) c.calibration_seed = to_u64("detection.calibration_seed", *v);
  if (auto v = get("detection.synthesis")) {
    const std::string m = lower(*v);
    if (m == "compressed") c.synthesis = est::Synthesis::Compressed;
    else if (m == "explicit") c.synthesis = est::Synthesis::Explicit;
    else throw ConfigError("detection.synthesis must be compressed or explicit");
  }
  if (auto v = get("detection.music_step_deg")) c.music_step = beam::deg2rad(to_double("detection.music_step_deg", *v));
  if (auto v = get("detection.music_window_deg"); v && !is_auto(*v))
    c.music_window = beam::deg2rad(to_double("detection.music_window_deg", *v));

  if (auto v = get("pruning.eps_r_m"); v && !is_auto(*v)) c.eps_r_m = to_double("pruning.eps_r_m", *v);
  if (auto v = get("pruning.eps_v_bins")) c.eps_v_bins = to_double("pruning.eps_v_bins", *v);
  if (auto v = get("pruning.eps_v_mps"); v && !is_auto(*v)) c.eps_v_mps = to_double("pruning.eps_v_mps", *v);

  if (auto v = get("ospa.order")) c.ospa.q = to_double("ospa.order", *v);
  if (auto v = get("ospa.cutoff_m")) c.ospa.cutoff = to_double("ospa.cutoff_m", *v);

  if (auto v = get("run.seed")) c.seed = to_u64("run.seed", *v);
  if (auto v = get("run.threads")) c.threads = to_count("run.threads", *v);

  if (auto v = get("experiment.kind")) e.kind = parse_experiment_kind(*v);
  if (auto v = get("experiment.trials")) e.trials = to_count("experiment.trials", *v);
  if (auto v = get("experiment.snr_db")) e.snr_db = parse_axis(*v);
  if (auto v = get("experiment.ssir_db")) e.ssir_db = parse_axis(*v);
  if (auto v = get("experiment.distance_m")) e.distance_m = parse_axis(*v);
  if (auto v = get("experiment.rho")) e.rho = parse_axis(*v);
  if (auto v = get("experiment.n_r")) e.n_r = parse_axis(*v);
  if (auto v = get("experiment.n_dir")) e.n_dir = parse_axis(*v);
  if (auto v = get("experiment.rmse_gating")) {
    const std::string m = lower(*v);
    if (m == "detected") e.rmse_gating = RmseGating::Detected;
    else if (m == "all") e.rmse_gating = RmseGating::All;
    else throw ConfigError("experiment.rmse_gating must be detected or all");
  }
  if (auto v = get("experiment.map_max_range_m"); v && !is_auto(*v))
    e.map_max_range_m = to_double("experiment.map_max_range_m", *v);

  e.snr_db = default_axis(e.snr_db, parse_axis("-65:5:-15"));
  e.ssir_db = default_axis(e.ssir_db, parse_axis("-20:5:30"));
  e.distance_m = default_axis(e.distance_m, parse_axis("20:5:85"));
  e.rho = default_axis(e.rho, {c.rho});
  e.n_r = default_axis(e.n_r, {static_cast<double>(c.n_r)});
  e.n_dir = default_axis(e.n_dir, parse_axis("30:5:60"));

  validate(c);
  validate(e);

  auto& r = rc.resolved;
  r["radio.numerology"] = c.numerology.name;
  r["radio.fc_hz"] = format(c.numerology.fc);
  r["radio.delta_f_hz"] = format(c.numerology.delta_f);
  r["radio.subcarriers"] = std::to_string(c.numerology.k);
  r["radio.symbols_per_frame"] = std::to_string(c.numerology.m);
  r["radio.symbols_per_direction"] = std::to_string(c.numerology.ms);
  r["radio.doppler_padding"] = std::to_string(c.numerology.fp);
  r["radio.n_t"] = std::to_string(c.n_t);
  r["radio.n_r"] = std::to_string(c.n_r);
  r["radio.rho"] = format(c.rho);
  r["radio.eirp_dbm"] = format(c.eirp_dbm);
  r["radio.noise_figure_db"] = format(c.noise_figure_db);
  r["radio.temperature_k"] = format(c.temperature_k);
  r["radio.rx_gain"] = format(c.rx_gain);
  r["radio.amplitude"] = c.amplitude == chan::AmplitudeMode::LinkBudget ? "link-budget" : "snr-direct";
  r["radio.snr_db"] = format(c.snr_db);
  r["radio.comm_theta_deg"] = format(beam::rad2deg(c.theta_comm));
  r["scan.theta_start_deg"] = format(beam::rad2deg(c.scan.theta_start));
  r["scan.theta_end_deg"] = format(beam::rad2deg(c.scan.theta_end));
  r["scan.n_dir"] = std::to_string(c.scan.ndir);
  r["targets.mode"] = t.mode == TargetMode::None ? "none" : t.mode == TargetMode::Random ? "random" : "explicit";
  r["targets.count"] = std::to_string(t.count);
  r["targets.range_min_m"] = format(t.range_min_m);
  r["targets.range_max_m"] = format(t.range_max_m);
  r["targets.theta_min_deg"] = format(beam::rad2deg(t.theta_min));
  r["targets.theta_max_deg"] = format(beam::rad2deg(t.theta_max));
  r["targets.velocity_min_mps"] = format(t.velocity_min_mps);
  r["targets.velocity_max_mps"] = format(t.velocity_max_mps);
  r["targets.rcs_m2"] = format(t.rcs_m2);
  std::string list;
  for (const auto& x : t.list)
    list += (list.empty() ? "" : "; ") + format(x.range_m) + "," + format(beam::rad2deg(x.theta)) + "," +
            format(x.radial_velocity) + "," + format(x.rcs);
  r["targets.list"] = list;
  r["targets.ue"] = t.ue ? "true" : "false";
  r["interference.ssir_db"] = c.si.enabled() ? format(*c.si.ssir_db) : "off";
  r["detection.pfa"] = format(c.pfa);
  r["detection.calibration_maps"] = std::to_string(c.calibration_maps);
  r["detection.calibration_seed"] = std::to_string(c.calibration_seed);
  r["detection.synthesis"] = c.synthesis == est::Synthesis::Compressed ? "compressed" : "explicit";
  r["detection.music_step_deg"] = format(beam::rad2deg(c.music_step));
  r["detection.music_window_deg"] = c.music_window ? format(beam::rad2deg(*c.music_window)) : "auto";
  r["pruning.eps_r_m"] = c.eps_r_m ? format(*c.eps_r_m) : "auto";
  r["pruning.eps_v_bins"] = format(c.eps_v_bins);
  r["pruning.eps_v_mps"] = c.eps_v_mps ? format(*c.eps_v_mps) : "auto";
  r["ospa.order"] = format(c.ospa.q);
  r["ospa.cutoff_m"] = format(c.ospa.cutoff);
  r["run.seed"] = std::to_string(c.seed);
  r["run.threads"] = std::to_string(c.threads);
  r["experiment.kind"] = to_string(e.kind);
  r["experiment.trials"] = std::to_string(e.trials);
  r["experiment.snr_db"] = format_axis(e.snr_db);
  r["experiment.ssir_db"] = format_axis(e.ssir_db);
  r["experiment.distance_m"] = format_axis(e.distance_m);
  r["experiment.rho"] = format_axis(e.rho);
  r["experiment.n_r"] = format_axis(e.n_r);
  r["experiment.n_dir"] = format_axis(e.n_dir);
  r["experiment.rmse_gating"] = e.rmse_gating == RmseGating::Detected ? "detected" : "all";
  r["experiment.map_max_range_m"] = e.map_max_range_m ? format(*e.map_max_range_m) : "auto";
  return rc;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace jsc::sim
