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

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "leeq/classical.hpp"
#include "leeq/cli/config.hpp"
#include "leeq/obstacles.hpp"

namespace leeq::cli {

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitGuard = 2, kExitDiverged = 3 };

/// Oracle reference above this many qubits is refused.
inline constexpr int kOracleMaxQubits = 20;
/// Dense operator comparisons (bound --measure) above this many qubits are refused.
inline constexpr int kDenseMaxQubits = 12;
/// Interior amplitude above this fails the impermeability check.
inline constexpr double kImpermeabilityTol = 1e-10;

struct Overrides {
  std::optional<double> tau;
  std::optional<int> steps;
  std::optional<std::string> scheme;
  std::optional<std::string> bc;
  std::optional<std::string> output_dir;
  std::optional<double> fdm_tau;
  bool oracle = false;
  std::string dump_circuit;
};

void apply_overrides(ExperimentConfig& cfg, const Overrides& o);

/// Empty when the config names no obstacle.
ObstacleSpec load_obstacle(const ExperimentConfig& cfg);

/// Physical field (no rescaling) of a plain amplitude vector.
FieldGrid field_from_vector(const CVec& f, const RegisterLayout& layout);

struct CompareRow {
  int step = 0;
  double time = 0.0;
  double l2_quantum = 0.0;
  double l2_fdm = 0.0;
  double quantum_norm = 1.0;
  double fdm_growth = 1.0;
};

struct CompareResult {
  std::vector<CompareRow> rows;
  bool fdm_diverged = false;
  /// Forward Euler at the quantum step size over `coarse_horizon`.
  bool coarse_diverged = false;
  double coarse_diverged_at = -1.0;
  double coarse_max_growth = 1.0;
  double coarse_horizon = 0.0;
};

/// Quantum, forward Euler (at cfg.fdm_tau) and exponential reference at the
/// snapshot times of cfg. Pressure L2 in physical units. A non-positive
/// coarse_horizon uses the schedule's total time.
CompareResult run_compare(const ExperimentConfig& cfg, double coarse_horizon = 0.0);

struct GateCountRow {
  int n = 0;
  GateCount count;
  double envelope = 0.0;
};
struct GateCountResult {
  std::vector<GateCountRow> rows;
  /// count ~ a n^2 + b n + c
  double a = 0.0, b = 0.0, c = 0.0;
  double relative_residual = 0.0;
};
GateCountResult run_gate_count(const ExperimentConfig& cfg, int n_min, int n_max);

struct ImpermeabilityResult {
  bool skipped = false;
  int steps = 0;
  double max_inside = 0.0;
};
/// Random state supported outside the obstacle, evolved `steps` times.
ImpermeabilityResult run_impermeability(const ExperimentConfig& cfg, const ObstacleSpec& o,
                                        int steps);

/// Entry point of the `leeq` tool. Diagnostics go to err, summaries to out.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace leeq::cli
