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
#include <vector>

#include "leeq/diffops.hpp"
#include "leeq/layout.hpp"
#include "leeq/lee.hpp"

namespace leeq::cli {

inline constexpr int kConfigVersion = 1;

/// Flat `key = value` experiment description. `source` may repeat. Obstacle
/// paths are relative to the config file, output_dir to the working directory.
struct ExperimentConfig {
  GridSpec grid{5, 5, 0.25};
  LeeParams params{};
  TrotterSchedule schedule{0.05, 40};
  int snapshot_every = 10;
  BoundaryCondition bc = BoundaryCondition::Dirichlet;
  StepScheme scheme = StepScheme::Central;
  std::string obstacle_mask;
  std::string obstacle_cells;
  std::vector<PointSource> sources;
  std::string output_dir = "out";
  double fdm_tau = 0.005;
  bool oracle = false;
  std::uint64_t seed = 1;

  /// Directory used to resolve relative paths; not serialized.
  std::filesystem::path base_dir = ".";

  void validate() const;
  std::filesystem::path resolve(const std::string& p) const;
};

/// Throws ParseError naming the line and key.
ExperimentConfig parse_config(std::istream& in, const std::filesystem::path& base_dir = ".");
ExperimentConfig load_config(const std::filesystem::path& path);
std::string serialize_config(const ExperimentConfig& cfg);

}  // namespace leeq::cli
