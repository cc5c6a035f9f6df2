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

#include <array>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace leeq {

enum class GateKind { X, H, P, RZ, RY, RZZ, CNOT, MCRZ, MCRZZ, CRY };

inline constexpr std::size_t kNumGateKinds = 10;

std::string_view gate_kind_name(GateKind k);
GateKind gate_kind_from_name(std::string_view name);
bool gate_kind_has_angle(GateKind k);

/// One gate of the IR.
///
/// Conventions: P(l) = diag(1, e^{il}), RZ(g) = exp(-i g Z / 2),
/// RY(g) = exp(-i g Y / 2), RZZ(g) = exp(-i g Z(x)Z / 2). Controls always
/// trigger on |1>.
struct Gate {
  GateKind kind = GateKind::X;
  double angle = 0.0;
  std::vector<int> controls;
  std::vector<int> targets;

  /// Checks arity, duplicate indices and control/target overlap.
  void validate(int num_qubits) const;
  Gate dagger() const;
  bool operator==(const Gate&) const = default;
};

Gate x_gate(int q);
Gate h_gate(int q);
Gate p_gate(double lambda, int q);
Gate rz_gate(double gamma, int q);
Gate ry_gate(double gamma, int q);
Gate rzz_gate(double gamma, int t1, int t2);
Gate cnot_gate(int control, int target);
Gate cry_gate(double gamma, int control, int target);

/// Multi-controlled RZ. An empty control list yields a plain RZ.
Gate mcrz(double gamma, std::vector<int> controls, int target);
/// Multi-controlled RZZ on (t1, t2). An empty control list yields a plain RZZ.
Gate mcrzz(double gamma, std::vector<int> controls, int t1, int t2);

/// Ordered gate list on a fixed number of qubits. Immutable once built.
class Circuit {
 public:
  explicit Circuit(int num_qubits = 0);

  int num_qubits() const { return num_qubits_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  void add(Gate g);
  void append(const Circuit& other);
  Circuit dagger() const;

  bool operator==(const Circuit&) const = default;

 private:
  int num_qubits_ = 0;
  std::vector<Gate> gates_;
};

/// Basis change into the modified Bell basis:
/// U_j(l) = (prod_{m<j} CNOT_m^j) P_j(l) H_j on slice[0..j).
/// Gates are appended in time order: H, P, then the CNOT fan-out.
void append_u_bell(Circuit& c, int j, double lambda, std::span<const int> slice);
void append_u_bell_dagger(Circuit& c, int j, double lambda, std::span<const int> slice);

/// U_j(lambda) as a circuit. num_qubits defaults to max(slice) + 1.
Circuit u_bell(int j, double lambda, std::span<const int> slice, int num_qubits = -1);

/// Per-kind gate tallies plus the CNOT total after decomposition.
struct GateCount {
  std::array<long, kNumGateKinds> per_kind{};
  long cnot_after_decomposition = 0;

  long operator[](GateKind k) const { return per_kind[static_cast<std::size_t>(k)]; }
  long total() const;
  GateCount& operator+=(const GateCount& o);
  friend GateCount operator+(GateCount a, const GateCount& b) { return a += b; }
  bool operator==(const GateCount&) const = default;
};

/// Rewrites every gate into {CNOT, RZ, RY, H, P, X}.
///
/// MCRZ with k >= 2 controls uses RZ(g/2) MCX RZ(-g/2) MCX, where the MCX is
/// the borrowed-qubit Toffoli ladder with relative-phase inner Toffolis; idle
/// qubits of the circuit serve as borrowed qubits. When fewer than k-2 are
/// idle the controls are split in halves and four half-size MCX are used.
/// MCRZZ follows X(t1) MCRZ(g; C+t1 -> t2) X(t1) MCRZ(-g; C+t1 -> t2).
Circuit decompose(const Circuit& circuit);

/// CNOT count of decompose() for a single gate, without building it.
long decomposed_cnot_count(const Gate& g, int num_qubits);

GateCount count(const Circuit& circuit);

/// Dense 2^n x 2^n unitary; refuses above 14 qubits.
Eigen::MatrixXcd dense_unitary(const Circuit& circuit);
inline constexpr int kDenseQubitGuard = 14;

/// Text export, one gate per line: `KIND angle controls->targets`.
void write_circuit_text(std::ostream& os, const Circuit& c);
std::string circuit_to_text(const Circuit& c);
Circuit parse_circuit_text(std::istream& is);

}  // namespace leeq
