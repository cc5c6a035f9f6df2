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

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "leeq/circuit.hpp"
#include "leeq/layout.hpp"

namespace leeq {

using cplx = std::complex<double>;

/// Dense statevector of 2^num_qubits amplitudes.
class StateVector {
 public:
  StateVector() = default;
  explicit StateVector(int num_qubits);
  StateVector(int num_qubits, std::vector<cplx> amplitudes);

  int num_qubits() const { return num_qubits_; }
  std::uint64_t dim() const { return amps_.size(); }
  std::span<const cplx> amplitudes() const { return amps_; }
  std::span<cplx> amplitudes() { return amps_; }
  cplx operator[](std::uint64_t i) const { return amps_[i]; }
  cplx& operator[](std::uint64_t i) { return amps_[i]; }

  double norm() const;
  void normalize();

 private:
  int num_qubits_ = 0;
  std::vector<cplx> amps_;
};

StateVector prepare_basis_state(int num_qubits, std::uint64_t index);

/// In place.
void apply_gate(StateVector& state, const Gate& gate);
void apply_circuit(StateVector& state, const Circuit& circuit);

/// Physical fields on a 2^n_x by 2^n_y grid, stored row-major with y as the
/// row: value(x, y) = data[y * nx_points + x].
struct FieldGrid {
  std::uint64_t nx_points = 0;
  std::uint64_t ny_points = 0;
  std::vector<double> p, u, v;
  double norm_factor = 1.0;
  /// Largest |Im| over the p/u/v sectors (the exact solution is real).
  double imag_residual = 0.0;
  /// L2 mass in the (a1 a2) = 11 sector, which must stay empty.
  double zero_sector_norm = 0.0;
  bool zero_sector_flag = false;

  std::size_t at(std::uint64_t x, std::uint64_t y) const { return y * nx_points + x; }
  const std::vector<double>& component(Component c) const;
  std::vector<double>& component(Component c);
};

inline constexpr double kZeroSectorTolerance = 1e-12;

FieldGrid extract_field(const StateVector& state, const RegisterLayout& layout,
                        double norm_factor);

/// Encodes (p, u, v, 0) into a normalized state; returns the norm factor.
StateVector encode_field(const FieldGrid& field, const RegisterLayout& layout,
                         double* norm_factor_out);

double l2_distance(const FieldGrid& a, const FieldGrid& b, Component component);

/// Sum over the grid of p^2 + u^2 + v^2.
double field_energy(const FieldGrid& f);

}  // namespace leeq
