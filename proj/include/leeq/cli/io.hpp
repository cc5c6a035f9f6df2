// Copyright 2026 The leeq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "json.hpp"

#include "leeq/layout.hpp"
#include "leeq/obstacles.hpp"
#include "leeq/statevector.hpp"

namespace leeq::cli {

inline constexpr int kReportSchemaVersion = 1;

/// ASCII raster, one row per y (row 0 is y = 0), characters 0/1. Lines
/// starting with '#' are ignored.
Mask parse_mask(std::istream& in);
Mask read_mask(const std::filesystem::path& path);
/// Smallest grid a mask fits: both sides must be powers of two.
GridSpec grid_for_mask(const Mask& mask, double l);

/// One `x_prefix,y_prefix` pair per line.
ObstacleSpec parse_cells(std::istream& in);
ObstacleSpec read_cells(const std::filesystem::path& path);

/// Header comment, then one row per y with comma-separated x values.
void write_snapshot_csv(std::ostream& out, const FieldGrid& field, Component component,
                        double time);
std::string snapshot_filename(int step, Component component);

void write_json(const std::filesystem::path& path, const nlohmann::json& doc);
void write_text(const std::filesystem::path& path, const std::string& text);

std::string format_double(double v);

}  // namespace leeq::cli
