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

#include "jsc/output.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "jsc/error.hpp"

namespace jsc::sim {

namespace fs = std::filesystem;

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

namespace {

std::ofstream open_out(const fs::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  return out;
}

double parse_number(const std::string& s, const fs::path& path) {
  if (s == "nan") return std::nan("");
  if (s == "inf") return HUGE_VAL;
  if (s == "-inf") return -HUGE_VAL;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw std::runtime_error("'" + path.string() + "': bad number '" + s + "'");
  return v;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

void write_csv(const ResultTable& table, const fs::path& path) {
  for (const auto& r : table.rows)
    if (r.size() != table.columns.size())
      throw DimensionError("table '" + table.name + "' has a row of the wrong width");
  auto out = open_out(path);
  for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << table.columns[i];
  out << '\n';
  for (const auto& r : table.rows) {
    for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << format_number(r[i]);
    out << '\n';
  }
  if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

ResultTable read_csv(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path.string() + "'");
  ResultTable t;
  t.name = path.stem().string();
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("'" + path.string() + "' has no header");
  t.columns = split(line);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> r;
    for (const auto& cell : split(line)) r.push_back(parse_number(cell, path));
    if (r.size() != t.columns.size()) throw std::runtime_error("'" + path.string() + "': ragged row");
    t.rows.push_back(std::move(r));
  }
  return t;
}

void write_map_csv(const RangeAngleMap& map, const fs::path& path) {
  auto out = open_out(path);
  out << "theta_deg\\range_m";
  for (double r : map.range_m) out << ',' << format_number(r);
  out << '\n';
  for (Eigen::Index i = 0; i < map.db.rows(); ++i) {
    out << format_number(map.theta_deg[static_cast<std::size_t>(i)]);
    for (Eigen::Index j = 0; j < map.db.cols(); ++j) out << ',' << format_number(map.db(i, j));
    out << '\n';
  }
  if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

std::string config_hash(const RunConfig& rc) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const auto& [key, value] : rc.resolved) {
    for (char c : key + "=" + value + "\n") {
      h ^= static_cast<unsigned char>(c);
      h *= 0x100000001b3ULL;
    }
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::vector<fs::path> write_outputs(const ExperimentResult& result, const RunConfig& rc, const fs::path& out_dir) {
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw std::runtime_error("cannot create output directory '" + out_dir.string() + "': " + ec.message());

  std::vector<fs::path> files;
  for (const auto& t : result.tables) {
    files.push_back(out_dir / (t.name + ".csv"));
    write_csv(t, files.back());
  }
  if (result.map) {
    files.push_back(out_dir / "range_angle_map.csv");
    write_map_csv(*result.map, files.back());
  }

  nlohmann::ordered_json manifest;
  manifest["version"] = kVersion;
  manifest["experiment"] = to_string(result.kind);
  manifest["seed"] = rc.scenario.seed;
  manifest["config_hash"] = config_hash(rc);
  nlohmann::ordered_json config = nlohmann::ordered_json::object();
  for (const auto& [key, value] : rc.resolved) config[key] = value;
  manifest["config"] = config;
  if (result.calibration) {
    const auto& c = *result.calibration;
    manifest["threshold_calibration"] = {{"pfa", c.pfa},
                                         {"maps", c.maps},
                                         {"seed", c.seed},
                                         {"factor", c.factor},
                                         {"empirical_factor", c.empirical_factor},
                                         {"initial_factor", c.initial_factor},
                                         {"effective_bins", c.effective_bins}};
  }
  auto names = nlohmann::ordered_json::array();
  for (const auto& f : files) names.push_back(f.filename().string());
  manifest["files"] = names;

  const fs::path manifest_path = out_dir / "manifest.json";
  auto out = open_out(manifest_path);
  out << manifest.dump(2) << '\n';
  if (!out) throw std::runtime_error("failed writing '" + manifest_path.string() + "'");
  files.push_back(manifest_path);
  return files;
}

}  // namespace jsc::sim
