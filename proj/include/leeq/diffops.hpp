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

#include <span>
#include <string_view>

#include "leeq/circuit.hpp"
#include "leeq/layout.hpp"
#include "leeq/sparse.hpp"

namespace leeq {

enum class BoundaryCondition { Dirichlet, Periodic };
enum class DiffScheme { Forward, Backward, Central };
enum class ShiftDirection { Plus, Minus };

std::string_view to_string(BoundaryCondition bc);
BoundaryCondition parse_boundary(std::string_view s);

/// |a><b| on one qubit.
SparseOperator sigma(int a, int b);
/// Projector onto the basis string `bits` (left-most bit most significant).
SparseOperator projector(std::string_view bits);

/// minus: sum_k |k-1><k|, plus: sum_k |k><k-1|.
SparseOperator shift(int n, ShiftDirection direction);

/// Central: (S- - S+)/(2l); forward: (S- - I)/l; backward: (I - S+)/l.
/// Periodic is defined for the central scheme only.
SparseOperator diff(int n, double l, DiffScheme scheme, BoundaryCondition bc);

/// j-th summand of the central operator on n bits:
/// I^(n-j) (x) (s01 (x) s10^(j-1) - s10 (x) s01^(j-1)) / (2l).
SparseOperator diff_term(int n, int j, double l);

/// Periodic corner entries (-s01^n + s10^n)/(2l).
SparseOperator periodic_corner(int n, double l);

/// Embeds an axis operator into the register ordering (ancillas, x, y).
SparseOperator lift(const SparseOperator& op, Axis axis, const GridSpec& grid, int ancillas);

/// Appends U_j(-pi/2) MCRZ(gamma/l) U_j(-pi/2)^dagger, i.e. exp(gamma * diff_term(j)).
void append_diff_group(Circuit& c, int j, double gamma, double l, std::span<const int> slice);

/// First-order product over j = 1..n of the central difference exponential,
/// exp(gamma D) up to Trotter error. Periodic prepends the corner factor.
/// num_qubits defaults to max(slice) + 1.
Circuit diff_evolution_circuit(int n, double gamma, double l, BoundaryCondition bc,
                               std::span<const int> slice, int num_qubits = -1);

}  // namespace leeq
