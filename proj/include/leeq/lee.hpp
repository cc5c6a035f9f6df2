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

#include <optional>
#include <string_view>
#include <vector>

#include "leeq/circuit.hpp"
#include "leeq/diffops.hpp"
#include "leeq/layout.hpp"
#include "leeq/obstacles.hpp"
#include "leeq/sparse.hpp"
#include "leeq/statevector.hpp"

namespace leeq {

struct LeeParams {
  double u_bar = 0.0;
  double rho_bar = 1.0;
  double c = 1.0;

  void validate() const;
  /// c = 1/rho_bar, where the generator is anti-symmetric.
  bool conservative() const;
  /// Off-diagonal coefficient of the anti-symmetric part, (1/rho + rho c^2)/2.
  double kappa() const { return (1.0 / rho_bar + rho_bar * c * c) / 2.0; }
};

struct TrotterSchedule {
  double tau = 0.05;
  int steps = 1;

  void validate() const;
  double total_time() const { return tau * steps; }
};

/// Central uses D+- everywhere. UpDown puts D+ on the super-diagonal blocks and
/// D- on the sub-diagonal blocks.
enum class StepScheme { Central, UpDown };

std::string_view to_string(StepScheme s);
StepScheme parse_step_scheme(std::string_view s);

/// Generator A of df/dt = A f on the (a1, a2, x, y) register. The exact
/// evolution is exp(A t) = exp(-i H t) with H = i A.
SparseOperator lee_generator(const LeeParams& params, const GridSpec& grid, BoundaryCondition bc,
                             const ObstacleSpec* obstacle, StepScheme scheme);

/// H = i A.
SparseOperator lee_hamiltonian(const LeeParams& params, const GridSpec& grid,
                               BoundaryCondition bc, const ObstacleSpec* obstacle,
                               StepScheme scheme);

/// One first-order step V(tau) = Q_y Q_x. Requires conservative parameters.
Circuit trotter_step(const LeeParams& params, const GridSpec& grid, double tau,
                     BoundaryCondition bc, const ObstacleSpec* obstacle, StepScheme scheme);

/// Spectral-norm bound on ||exp(-iH tau) - V(tau)||, evaluated at
/// n = max(n_x, n_y) for rectangular grids.
double trotter_error_bound(const LeeParams& params, const GridSpec& grid, double tau);

/// Generator pieces of the central free-space step, one per circuit group,
/// with A = sum of every piece.
struct GeneratorGroups {
  std::vector<SparseOperator> diag_x;  // -u (I4 (x) T_j) on x
  std::vector<SparseOperator> off_x;   // p-u coupling, one per j
  std::vector<SparseOperator> off_y;   // p-v coupling, one per j
};
GeneratorGroups lee_generator_groups(const LeeParams& params, const GridSpec& grid);

/// A = A1 + i A2 with both parts Hermitian.
struct SplitGenerator {
  SparseOperator a1;
  SparseOperator a2;
};
SplitGenerator split_generator(const SparseOperator& a);

/// exp(A tau) ~ nonunitary * circuit, where the circuit realizes exp(i A2 tau)
/// with the conservative builder and nonunitary = exp(A1 tau) is computed
/// classically.
struct SplitStep {
  SparseOperator nonunitary;
  Circuit circuit;
};
SplitStep split_step(const SplitGenerator& split, const LeeParams& params, const GridSpec& grid,
                     double tau, BoundaryCondition bc = BoundaryCondition::Dirichlet,
                     const ObstacleSpec* obstacle = nullptr);

/// Square of constant pressure with lower-left corner (x, y).
struct PointSource {
  std::uint64_t x = 0;
  std::uint64_t y = 0;
  std::uint64_t width = 1;
  double pressure = 1.0;
};

struct PreparedState {
  StateVector state;
  double norm_factor = 1.0;
  /// X/H circuit from |0>, present when the support is one binary cell.
  std::optional<Circuit> circuit;
};
PreparedState prepare_point_source(const GridSpec& grid, const std::vector<PointSource>& sources);

struct Snapshot {
  int step = 0;
  double time = 0.0;
  double norm = 1.0;
  FieldGrid field;
};

/// Applies the step circuit `schedule.steps` times; snapshots at step 0, every
/// `snapshot_every` steps, and at the final step.
std::vector<Snapshot> evolve(StateVector state, const Circuit& step_circuit,
                             const TrotterSchedule& schedule, int snapshot_every,
                             double norm_factor, const RegisterLayout& layout);

}  // namespace leeq
