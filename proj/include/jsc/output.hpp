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

#include <filesystem>
#include <string>
#include <vector>

#include "jsc/config.hpp"
#include "jsc/experiment.hpp"

namespace jsc::sim {

inline constexpr const char* kVersion = "jsc-sim 1.0.0";

// Shortest round-trip decimal form; "nan" / "inf" / "-inf" for non-finite values.
std::string format_number(double v);

void write_csv(const ResultTable& table, const std::filesystem::path& path);
ResultTable read_csv(const std::filesystem::path& path);

// Matrix CSV: header "theta_deg\\range_m" then range values; one row per direction.
void write_map_csv(const RangeAngleMap& map, const std::filesystem::path& path);

// FNV-1a 64 over the resolved "section.key=value" lines, as 16 hex digits.
std::string config_hash(const RunConfig& rc);

/// Writes <table>.csv for every table, range_angle_map.csv when present, and
/// manifest.json (resolved config, seed, hash, version, file list). Returns the written files.
std::vector<std::filesystem::path> write_outputs(const ExperimentResult& result, const RunConfig& rc,
                                                 const std::filesystem::path& out_dir);

}  // namespace jsc::sim
