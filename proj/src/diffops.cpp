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

#include "leeq/diffops.hpp"

#include <algorithm>
#include <numbers>
#include <string>

#include "leeq/errors.hpp"

namespace leeq {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

void check_n(int n) {
  if (n < 1 || n > 30) throw BoundsError("axis needs 1..30 qubits, got " + std::to_string(n));
}

SparseOperator kron_power(const SparseOperator& op, int times) {
  SparseOperator out = SparseOperator::identity(1);
  for (int i = 0; i < times; ++i) out = kron(out, op);
  return out;
}

}  // namespace

std::string_view to_string(BoundaryCondition bc) {
  return bc == BoundaryCondition::Dirichlet ? "dirichlet" : "periodic";
}

BoundaryCondition parse_boundary(std::string_view s) {
  if (s == "dirichlet") return BoundaryCondition::Dirichlet;
  if (s == "periodic") return BoundaryCondition::Periodic;
  throw ParseError("unknown boundary condition '" + std::string(s) + "'");
}

SparseOperator sigma(int a, int b) {
  if ((a != 0 && a != 1) || (b != 0 && b != 1)) throw BoundsError("sigma indices must be 0/1");
  return SparseOperator(2, {{a, b, 1.0}});
}

SparseOperator projector(std::string_view bits) {
  SparseOperator out = SparseOperator::identity(1);
  for (char ch : bits) {
    if (ch != '0' && ch != '1') throw ParseError("bitstring may contain only 0 and 1");
    const int b = ch - '0';
    out = kron(out, sigma(b, b));
  }
  return out;
}

SparseOperator shift(int n, ShiftDirection direction) {
  check_n(n);
  const std::int64_t dim = std::int64_t{1} << n;
  std::vector<SparseOperator::Entry> e;
  for (std::int64_t k = 1; k < dim; ++k) {
    if (direction == ShiftDirection::Minus) {
      e.push_back({k - 1, k, 1.0});
    } else {
      e.push_back({k, k - 1, 1.0});
    }
  }
  return SparseOperator(dim, e);
}

SparseOperator periodic_corner(int n, double l) {
  check_n(n);
  return (kron_power(sigma(1, 0), n) - kron_power(sigma(0, 1), n)) * cplx{1.0 / (2 * l), 0.0};
}

SparseOperator diff(int n, double l, DiffScheme scheme, BoundaryCondition bc) {
  check_n(n);
  if (!(l > 0.0)) throw BoundsError("lattice constant must be positive");
  if (bc == BoundaryCondition::Periodic && scheme != DiffScheme::Central) {
    throw Unsupported("periodic boundaries are only defined for the central scheme");
  }
  const std::int64_t dim = std::int64_t{1} << n;
  const SparseOperator sm = shift(n, ShiftDirection::Minus);
  const SparseOperator sp = shift(n, ShiftDirection::Plus);
  const SparseOperator id = SparseOperator::identity(dim);
  switch (scheme) {
    case DiffScheme::Forward: return (sm - id) * cplx{1.0 / l, 0.0};
    case DiffScheme::Backward: return (id - sp) * cplx{1.0 / l, 0.0};
    case DiffScheme::Central: break;
  }
  SparseOperator d = (sm - sp) * cplx{1.0 / (2 * l), 0.0};
  if (bc == BoundaryCondition::Periodic) d = d + periodic_corner(n, l);
  return d;
}

SparseOperator diff_term(int n, int j, double l) {
  check_n(n);
  if (j < 1 || j > n) throw BoundsError("diff_term needs 1 <= j <= n");
  const SparseOperator a = kron(sigma(0, 1), kron_power(sigma(1, 0), j - 1));
  const SparseOperator b = kron(sigma(1, 0), kron_power(sigma(0, 1), j - 1));
  const SparseOperator core = (a - b) * cplx{1.0 / (2 * l), 0.0};
  return kron(SparseOperator::identity(std::int64_t{1} << (n - j)), core);
}

SparseOperator lift(const SparseOperator& op, Axis axis, const GridSpec& grid, int ancillas) {
  grid.validate();
  const int n = grid.bits(axis);
  if (op.dim() != (std::int64_t{1} << n)) {
    throw DimensionMismatch("lift: operator dimension " + std::to_string(op.dim()) +
                            " does not match 2^" + std::to_string(n));
  }
  const SparseOperator anc = SparseOperator::identity(std::int64_t{1} << ancillas);
  if (axis == Axis::X) {
    return kron(anc, kron(op, SparseOperator::identity(std::int64_t{1} << grid.n_y)));
  }
  return kron(anc, kron(SparseOperator::identity(std::int64_t{1} << grid.n_x), op));
}

void append_diff_group(Circuit& c, int j, double gamma, double l, std::span<const int> slice) {
  append_u_bell_dagger(c, j, -kHalfPi, slice);
  c.add(mcrz(gamma / l, std::vector<int>(slice.begin(), slice.begin() + (j - 1)), slice[j - 1]));
  append_u_bell(c, j, -kHalfPi, slice);
}

Circuit diff_evolution_circuit(int n, double gamma, double l, BoundaryCondition bc,
                               std::span<const int> slice, int num_qubits) {
  check_n(n);
  if (static_cast<int>(slice.size()) != n) {
    throw DimensionMismatch("qubit slice must have n entries");
  }
  if (num_qubits < 0) num_qubits = *std::max_element(slice.begin(), slice.end()) + 1;
  Circuit c(num_qubits);
  if (bc == BoundaryCondition::Periodic) {
    // The corner pair |0..0>, |1..1> becomes the j=n pair after flipping the
    // lower n-1 bits, with the opposite sign.
    for (int m = 0; m < n - 1; ++m) c.add(x_gate(slice[m]));
    append_diff_group(c, n, -gamma, l, slice);
    for (int m = 0; m < n - 1; ++m) c.add(x_gate(slice[m]));
  }
  for (int j = 1; j <= n; ++j) append_diff_group(c, j, gamma, l, slice);
  return c;
}

}  // namespace leeq
