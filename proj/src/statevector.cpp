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

#include "leeq/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "leeq/errors.hpp"

namespace leeq {

namespace {

using u64 = std::uint64_t;

/// Enumerates all indices whose bits at `fixed_positions` equal the bits of
/// `fixed_values`; the remaining bits run over every combination.
/// `fixed_positions` must be sorted ascending.
template <typename F>
void for_each_index(int num_qubits, const std::vector<int>& fixed_positions,
                    u64 fixed_values, F&& f) {
  const int free_bits = num_qubits - static_cast<int>(fixed_positions.size());
  const u64 count = u64{1} << free_bits;
  for (u64 r = 0; r < count; ++r) {
    // Insert a zero at each fixed position, lowest first.
    u64 idx = r;
    for (int pos : fixed_positions) {
      const u64 low = idx & ((u64{1} << pos) - 1);
      idx = ((idx >> pos) << (pos + 1)) | low;
    }
    f(idx | fixed_values);
  }
}

struct Mat2 {
  cplx a, b, c, d;  // [[a, b], [c, d]]
};

Mat2 single_qubit_matrix(const Gate& g) {
  using namespace std::complex_literals;
  const double h = std::numbers::sqrt2 / 2.0;
  switch (g.kind) {
    case GateKind::X:
    case GateKind::CNOT:
      return {0.0, 1.0, 1.0, 0.0};
    case GateKind::H:
      return {h, h, h, -h};
    case GateKind::P:
      return {1.0, 0.0, 0.0, std::exp(1i * g.angle)};
    case GateKind::RZ:
    case GateKind::MCRZ:
      return {std::exp(-0.5i * g.angle), 0.0, 0.0, std::exp(0.5i * g.angle)};
    case GateKind::RY:
    case GateKind::CRY: {
      const double cs = std::cos(g.angle / 2), sn = std::sin(g.angle / 2);
      return {cs, -sn, sn, cs};
    }
    default:
      throw InvalidGate("not a single-target gate: " + std::string(gate_kind_name(g.kind)));
  }
}

bool is_diagonal(GateKind k) {
  return k == GateKind::P || k == GateKind::RZ || k == GateKind::MCRZ ||
         k == GateKind::RZZ || k == GateKind::MCRZZ;
}

void apply_diagonal(std::span<cplx> amps, int nq, const Gate& g) {
  using namespace std::complex_literals;
  std::vector<int> fixed = g.controls;
  u64 fixed_vals = 0;
  for (int c : g.controls) fixed_vals |= u64{1} << c;
  std::sort(fixed.begin(), fixed.end());

  if (g.kind == GateKind::RZZ || g.kind == GateKind::MCRZZ) {
    const u64 m1 = u64{1} << g.targets[0], m2 = u64{1} << g.targets[1];
    const cplx same = std::exp(-0.5i * g.angle), diff = std::exp(0.5i * g.angle);
    for_each_index(nq, fixed, fixed_vals, [&](u64 i) {
      const bool b1 = i & m1, b2 = i & m2;
      amps[i] *= (b1 == b2) ? same : diff;
    });
    return;
  }
  const Mat2 m = single_qubit_matrix(g);
  const u64 tm = u64{1} << g.targets[0];
  for_each_index(nq, fixed, fixed_vals,
                 [&](u64 i) { amps[i] *= (i & tm) ? m.d : m.a; });
}

void apply_single_target(std::span<cplx> amps, int nq, const Gate& g) {
  const int t = g.targets[0];
  const u64 tm = u64{1} << t;
  std::vector<int> fixed = g.controls;
  fixed.push_back(t);
  std::sort(fixed.begin(), fixed.end());
  u64 fixed_vals = 0;
  for (int c : g.controls) fixed_vals |= u64{1} << c;

  if (g.kind == GateKind::X || g.kind == GateKind::CNOT) {
    for_each_index(nq, fixed, fixed_vals,
                   [&](u64 i) { std::swap(amps[i], amps[i | tm]); });
    return;
  }
  const Mat2 m = single_qubit_matrix(g);
  for_each_index(nq, fixed, fixed_vals, [&](u64 i) {
    const cplx v0 = amps[i], v1 = amps[i | tm];
    amps[i] = m.a * v0 + m.b * v1;
    amps[i | tm] = m.c * v0 + m.d * v1;
  });
}

}  // namespace

StateVector::StateVector(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 0 || num_qubits > 34) {
    throw BoundsError("unsupported qubit count " + std::to_string(num_qubits));
  }
  amps_.assign(u64{1} << num_qubits, cplx{0.0, 0.0});
}

StateVector::StateVector(int num_qubits, std::vector<cplx> amplitudes)
    : num_qubits_(num_qubits), amps_(std::move(amplitudes)) {
  if (num_qubits < 0 || num_qubits > 34 || amps_.size() != (u64{1} << num_qubits)) {
    throw DimensionMismatch("amplitude array length must be 2^num_qubits");
  }
}

double StateVector::norm() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

void StateVector::normalize() {
  const double n = norm();
  if (!(n > 0.0)) throw Error("cannot normalize a zero state");
  for (auto& a : amps_) a /= n;
}

StateVector prepare_basis_state(int num_qubits, std::uint64_t index) {
  StateVector s(num_qubits);
  if (index >= s.dim()) {
    throw BoundsError("basis index " + std::to_string(index) + " out of range for " +
                      std::to_string(num_qubits) + " qubits");
  }
  s[index] = 1.0;
  return s;
}

void apply_gate(StateVector& state, const Gate& gate) {
  gate.validate(state.num_qubits());
  const int nq = state.num_qubits();
  if (is_diagonal(gate.kind)) {
    apply_diagonal(state.amplitudes(), nq, gate);
  } else {
    apply_single_target(state.amplitudes(), nq, gate);
  }
}

void apply_circuit(StateVector& state, const Circuit& circuit) {
  if (circuit.num_qubits() != state.num_qubits()) {
    throw InvalidCircuit("circuit has " + std::to_string(circuit.num_qubits()) +
                         " qubits, state has " + std::to_string(state.num_qubits()));
  }
  for (const Gate& g : circuit.gates()) apply_gate(state, g);
}

const std::vector<double>& FieldGrid::component(Component c) const {
  switch (c) {
    case Component::P: return p;
    case Component::U: return u;
    case Component::V: return v;
    default: throw Error("the zero sector has no field grid");
  }
}

std::vector<double>& FieldGrid::component(Component c) {
  return const_cast<std::vector<double>&>(std::as_const(*this).component(c));
}

FieldGrid extract_field(const StateVector& state, const RegisterLayout& layout,
                        double norm_factor) {
  if (layout.ancillas != 2 || state.num_qubits() != layout.num_qubits()) {
    throw DimensionMismatch("state does not match the LEE register layout");
  }
  FieldGrid f;
  f.nx_points = u64{1} << layout.n_x;
  f.ny_points = u64{1} << layout.n_y;
  f.norm_factor = norm_factor;
  const u64 pts = f.nx_points * f.ny_points;
  f.p.assign(pts, 0.0);
  f.u.assign(pts, 0.0);
  f.v.assign(pts, 0.0);
  double zero_mass = 0.0;
  for (u64 x = 0; x < f.nx_points; ++x) {
    for (u64 y = 0; y < f.ny_points; ++y) {
      for (Component c : {Component::P, Component::U, Component::V}) {
        const cplx a = state[layout.index_of(c, x, y)];
        f.component(c)[f.at(x, y)] = a.real() * norm_factor;
        f.imag_residual = std::max(f.imag_residual, std::abs(a.imag()));
      }
      zero_mass += std::norm(state[layout.index_of(Component::Zero, x, y)]);
    }
  }
  f.zero_sector_norm = std::sqrt(zero_mass);
  f.zero_sector_flag = f.zero_sector_norm > kZeroSectorTolerance;
  return f;
}

StateVector encode_field(const FieldGrid& field, const RegisterLayout& layout,
                         double* norm_factor_out) {
  if (layout.ancillas != 2 || field.nx_points != (u64{1} << layout.n_x) ||
      field.ny_points != (u64{1} << layout.n_y)) {
    throw DimensionMismatch("field grid does not match the register layout");
  }
  std::vector<cplx> amps(layout.dim(), cplx{0.0, 0.0});
  for (u64 x = 0; x < field.nx_points; ++x) {
    for (u64 y = 0; y < field.ny_points; ++y) {
      for (Component c : {Component::P, Component::U, Component::V}) {
        amps[layout.index_of(c, x, y)] = field.component(c)[field.at(x, y)];
      }
    }
  }
  StateVector s(layout.num_qubits(), std::move(amps));
  const double n = s.norm();
  s.normalize();
  if (norm_factor_out) *norm_factor_out = n;
  return s;
}

double l2_distance(const FieldGrid& a, const FieldGrid& b, Component component) {
  if (a.nx_points != b.nx_points || a.ny_points != b.ny_points) {
    throw DimensionMismatch("field grids have different shapes");
  }
  const auto& va = a.component(component);
  const auto& vb = b.component(component);
  double s = 0.0;
  for (std::size_t i = 0; i < va.size(); ++i) s += (va[i] - vb[i]) * (va[i] - vb[i]);
  return std::sqrt(s);
}

double field_energy(const FieldGrid& f) {
  double s = 0.0;
  for (std::size_t i = 0; i < f.p.size(); ++i) {
    s += f.p[i] * f.p[i] + f.u[i] * f.u[i] + f.v[i] * f.v[i];
  }
  return s;
}

}  // namespace leeq
