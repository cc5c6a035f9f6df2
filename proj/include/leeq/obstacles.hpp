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

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "leeq/circuit.hpp"
#include "leeq/layout.hpp"
#include "leeq/sparse.hpp"
#include "leeq/statevector.hpp"

namespace leeq {

/// Rectangle of points whose coordinate bitstrings start with the given
/// prefixes. The left-most character is the most significant bit.
struct BinaryCell {
  std::string x_prefix;
  std::string y_prefix;

  const std::string& prefix(Axis a) const { return a == Axis::X ? x_prefix : y_prefix; }
  void validate(const GridSpec& grid) const;
  bool contains(std::uint64_t x, std::uint64_t y, const GridSpec& grid) const;
  bool operator==(const BinaryCell&) const = default;
};

/// Raster of 2^n_x by 2^n_y points, row-major with y as the row.
struct Mask {
  std::uint64_t nx_points = 0;
  std::uint64_t ny_points = 0;
  std::vector<std::uint8_t> bits;

  Mask() = default;
  Mask(std::uint64_t nx, std::uint64_t ny) : nx_points(nx), ny_points(ny), bits(nx * ny, 0) {}
  std::uint8_t at(std::uint64_t x, std::uint64_t y) const { return bits[y * nx_points + x]; }
  std::uint8_t& at(std::uint64_t x, std::uint64_t y) { return bits[y * nx_points + x]; }
  std::size_t count() const;
  bool operator==(const Mask&) const = default;
};

struct ObstacleSpec {
  std::vector<BinaryCell> cells;

  bool empty() const { return cells.empty(); }
  /// Checks every cell against the grid and pairwise disjointness.
  void validate(const GridSpec& grid) const;
  Mask rasterize(const GridSpec& grid) const;
};

/// Quadtree split of a raster mask into binary cells. Mixed regions split the
/// axis with more remaining bits (ties split x), skipping an axis the region
/// is constant along; uniform regions emit a cell once both prefixes are
/// non-empty.
ObstacleSpec decompose_mask(const Mask& mask, const GridSpec& grid);

/// Common-prefix lengths of a prefix with its integer neighbours. nullopt marks
/// the domain boundary (all-zero prefix on the minus side, all-one on the plus
/// side), where no correction is needed.
struct CommonPrefix {
  std::optional<int> minus;
  std::optional<int> plus;
};
CommonPrefix common_prefix_lengths(const std::string& prefix, int n);

struct ControlBit {
  int qubit;
  int bit;
  bool operator==(const ControlBit&) const = default;
};

/// One removed pair of matrix elements:
/// projector(common prefix) (x) sigma_nhat (x) projector(cross prefix).
struct CorrectionTerm {
  Axis axis = Axis::X;
  int nhat = 1;
  std::string prefix_bits;  // shared leading bits, length n_axis - nhat
  std::string cross_bits;   // full prefix of the cell on the other axis
  std::vector<ControlBit> prefix_controls;
  std::vector<ControlBit> cross_controls;
  int sign = -1;  // subtracted from the generator

  std::vector<ControlBit> controls() const;
};

std::vector<CorrectionTerm> correction_terms(const BinaryCell& cell, Axis axis,
                                             const GridSpec& grid);

/// Corrections of every cell on one axis with pairs shared by neighbouring
/// cells kept once. Terms are ordered by nhat, then by cell order.
std::vector<CorrectionTerm> obstacle_terms(const ObstacleSpec& obstacle, Axis axis,
                                           const GridSpec& grid);

/// Generator of a correction term on the (ancillas, x, y) register.
SparseOperator correction_generator(const CorrectionTerm& term, const GridSpec& grid,
                                    int ancillas);

/// Lifted central Dirichlet difference operator with the obstacle pairs removed.
SparseOperator masked_diff(Axis axis, const ObstacleSpec& obstacle, const GridSpec& grid,
                           int ancillas = 0);

/// Generator of the j-th group of masked_diff: diff_term(j) minus the nhat=j
/// corrections.
SparseOperator masked_group_generator(int j, Axis axis, const ObstacleSpec& obstacle,
                                      const GridSpec& grid, int ancillas = 0);

/// Puts zero-valued controls into the |1> frame with X gates, tracking which
/// qubits are currently flipped so that consecutive terms share flips.
class ControlFrame {
 public:
  explicit ControlFrame(Circuit& c) : c_(c) {}
  /// Flips as needed and returns the plain qubit list.
  std::vector<int> enter(const std::vector<ControlBit>& controls);
  /// Undoes all outstanding flips.
  void reset();

 private:
  Circuit& c_;
  std::vector<int> flipped_;
};

/// exp(gamma * masked_diff) on the given layout, one group per j:
/// U_j^dagger, MCRZ(gamma/l), corrections with MCRZ(-gamma/l), U_j.
Circuit masked_diff_circuit(double gamma, Axis axis, const ObstacleSpec& obstacle,
                            const GridSpec& grid, const RegisterLayout& layout);
/// Only the group for one j.
Circuit masked_diff_group_circuit(int j, double gamma, Axis axis, const ObstacleSpec& obstacle,
                                  const GridSpec& grid, const RegisterLayout& layout);

/// Largest |amplitude| over all sectors at points inside the obstacle.
double max_amplitude_inside(const StateVector& state, const ObstacleSpec& obstacle,
                            const GridSpec& grid, const RegisterLayout& layout);

}  // namespace leeq
