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
#include <vector>

#include "leeq/errors.hpp"

namespace leeq {

enum class Axis { X, Y };

/// Discretization of the 2D domain: 2^n_x by 2^n_y points, spacing l.
struct GridSpec {
  int n_x = 1;
  int n_y = 1;
  double l = 1.0;

  std::uint64_t points_x() const { return std::uint64_t{1} << n_x; }
  std::uint64_t points_y() const { return std::uint64_t{1} << n_y; }
  int bits(Axis a) const { return a == Axis::X ? n_x : n_y; }
  void validate() const;
};

/// Physical field component stored in an ancilla sector.
enum class Component { P = 0, U = 1, V = 2, Zero = 3 };

/// Qubit layout shared by every module.
///
/// Qubit k is bit k of the global basis index. The y register occupies the
/// lowest n_y qubits, x the next n_x, and the (optional) two ancillas sit on
/// top with a1 the most significant qubit:
///
///   index = ((a1 * 2 + a2) * 2^n_x + x) * 2^n_y + y
///
/// Inside an axis register q_{axis,1} is the least significant bit, so the
/// left-most bit of a coordinate bitstring lives on the highest qubit.
struct RegisterLayout {
  int n_x = 1;
  int n_y = 1;
  int ancillas = 2;  // 0 for bare difference operators, 2 for LEE

  RegisterLayout() = default;
  RegisterLayout(int nx, int ny, int anc) : n_x(nx), n_y(ny), ancillas(anc) {}
  static RegisterLayout lee(const GridSpec& g) { return {g.n_x, g.n_y, 2}; }
  static RegisterLayout bare(const GridSpec& g) { return {g.n_x, g.n_y, 0}; }

  int num_qubits() const { return n_x + n_y + ancillas; }
  std::uint64_t dim() const { return std::uint64_t{1} << num_qubits(); }
  std::uint64_t points() const { return std::uint64_t{1} << (n_x + n_y); }

  /// Qubit of q_{x,i} / q_{y,i}, 1-based i as in the circuit diagrams.
  int qx(int i) const { return n_y + i - 1; }
  int qy(int i) const { return i - 1; }
  int q(Axis a, int i) const { return a == Axis::X ? qx(i) : qy(i); }
  int bits(Axis a) const { return a == Axis::X ? n_x : n_y; }
  int a1() const { return n_x + n_y + 1; }
  int a2() const { return n_x + n_y; }

  /// q_{axis,1..n} in order.
  std::vector<int> axis_qubits(Axis a) const;

  std::uint64_t index_of(Component c, std::uint64_t x, std::uint64_t y) const {
    return ((static_cast<std::uint64_t>(c) << n_x | x) << n_y) | y;
  }
  struct Decoded {
    Component component;
    std::uint64_t x;
    std::uint64_t y;
  };
  Decoded decode(std::uint64_t index) const {
    const std::uint64_t y = index & ((std::uint64_t{1} << n_y) - 1);
    const std::uint64_t x = (index >> n_y) & ((std::uint64_t{1} << n_x) - 1);
    const auto c = static_cast<Component>(index >> (n_x + n_y));
    return {c, x, y};
  }
};

}  // namespace leeq
