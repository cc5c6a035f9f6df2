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

#include "leeq/circuit.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "leeq/errors.hpp"
#include "leeq/statevector.hpp"

namespace leeq {

namespace {

constexpr std::array<std::string_view, kNumGateKinds> kNames = {
    "X", "H", "P", "RZ", "RY", "RZZ", "CNOT", "MCRZ", "MCRZZ", "CRY"};

struct Arity {
  int min_controls, max_controls, targets;
};

Arity arity(GateKind k) {
  switch (k) {
    case GateKind::X:
    case GateKind::H:
    case GateKind::P:
    case GateKind::RZ:
    case GateKind::RY: return {0, 0, 1};
    case GateKind::RZZ: return {0, 0, 2};
    case GateKind::CNOT:
    case GateKind::CRY: return {1, 1, 1};
    case GateKind::MCRZ: return {0, 1 << 20, 1};
    case GateKind::MCRZZ: return {0, 1 << 20, 2};
  }
  return {0, 0, 0};
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

std::vector<int> split_ints(const std::string& s, int line_no) {
  std::vector<int> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw ParseError("circuit line " + std::to_string(line_no) + ": bad qubit index '" +
                       item + "'");
    }
  }
  return out;
}

}  // namespace

std::string_view gate_kind_name(GateKind k) { return kNames[static_cast<std::size_t>(k)]; }

GateKind gate_kind_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kNumGateKinds; ++i) {
    if (kNames[i] == name) return static_cast<GateKind>(i);
  }
  throw ParseError("unknown gate kind '" + std::string(name) + "'");
}

bool gate_kind_has_angle(GateKind k) {
  return !(k == GateKind::X || k == GateKind::H || k == GateKind::CNOT);
}

void Gate::validate(int num_qubits) const {
  const Arity a = arity(kind);
  const int nc = static_cast<int>(controls.size());
  if (nc < a.min_controls || nc > a.max_controls ||
      static_cast<int>(targets.size()) != a.targets) {
    throw InvalidGate(std::string(gate_kind_name(kind)) + ": wrong number of controls/targets");
  }
  std::vector<int> all = controls;
  all.insert(all.end(), targets.begin(), targets.end());
  for (int q : all) {
    if (q < 0 || q >= num_qubits) {
      throw InvalidGate(std::string(gate_kind_name(kind)) + ": qubit " + std::to_string(q) +
                        " outside register of " + std::to_string(num_qubits));
    }
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw InvalidGate(std::string(gate_kind_name(kind)) +
                      ": controls and targets must be distinct qubits");
  }
}

Gate Gate::dagger() const {
  Gate g = *this;
  if (gate_kind_has_angle(kind)) g.angle = -angle;
  return g;
}

Gate x_gate(int q) { return {GateKind::X, 0.0, {}, {q}}; }
Gate h_gate(int q) { return {GateKind::H, 0.0, {}, {q}}; }
Gate p_gate(double lambda, int q) { return {GateKind::P, lambda, {}, {q}}; }
Gate rz_gate(double gamma, int q) { return {GateKind::RZ, gamma, {}, {q}}; }
Gate ry_gate(double gamma, int q) { return {GateKind::RY, gamma, {}, {q}}; }
Gate rzz_gate(double gamma, int t1, int t2) { return {GateKind::RZZ, gamma, {}, {t1, t2}}; }
Gate cnot_gate(int control, int target) { return {GateKind::CNOT, 0.0, {control}, {target}}; }
Gate cry_gate(double gamma, int control, int target) {
  return {GateKind::CRY, gamma, {control}, {target}};
}

Gate mcrz(double gamma, std::vector<int> controls, int target) {
  if (controls.empty()) return rz_gate(gamma, target);
  Gate g{GateKind::MCRZ, gamma, std::move(controls), {target}};
  g.validate(1 << 20);
  return g;
}

Gate mcrzz(double gamma, std::vector<int> controls, int t1, int t2) {
  if (controls.empty()) {
    Gate g = rzz_gate(gamma, t1, t2);
    g.validate(1 << 20);
    return g;
  }
  Gate g{GateKind::MCRZZ, gamma, std::move(controls), {t1, t2}};
  g.validate(1 << 20);
  return g;
}

Circuit::Circuit(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 0) throw InvalidCircuit("negative qubit count");
}

void Circuit::add(Gate g) {
  g.validate(num_qubits_);
  gates_.push_back(std::move(g));
}

void Circuit::append(const Circuit& other) {
  if (other.num_qubits_ != num_qubits_) {
    throw InvalidCircuit("cannot append a " + std::to_string(other.num_qubits_) +
                         "-qubit circuit to a " + std::to_string(num_qubits_) + "-qubit one");
  }
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
}

Circuit Circuit::dagger() const {
  Circuit c(num_qubits_);
  c.gates_.reserve(gates_.size());
  for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) c.gates_.push_back(it->dagger());
  return c;
}

void append_u_bell(Circuit& c, int j, double lambda, std::span<const int> slice) {
  if (j < 1 || static_cast<int>(slice.size()) < j) {
    throw BoundsError("u_bell needs 1 <= j <= |slice| (j=" + std::to_string(j) + ")");
  }
  const int top = slice[j - 1];
  c.add(h_gate(top));
  c.add(p_gate(lambda, top));
  for (int m = 0; m < j - 1; ++m) c.add(cnot_gate(top, slice[m]));
}

void append_u_bell_dagger(Circuit& c, int j, double lambda, std::span<const int> slice) {
  if (j < 1 || static_cast<int>(slice.size()) < j) {
    throw BoundsError("u_bell needs 1 <= j <= |slice| (j=" + std::to_string(j) + ")");
  }
  const int top = slice[j - 1];
  for (int m = j - 2; m >= 0; --m) c.add(cnot_gate(top, slice[m]));
  c.add(p_gate(-lambda, top));
  c.add(h_gate(top));
}

Circuit u_bell(int j, double lambda, std::span<const int> slice, int num_qubits) {
  if (slice.empty()) throw BoundsError("u_bell: empty qubit slice");
  if (num_qubits < 0) num_qubits = *std::max_element(slice.begin(), slice.end()) + 1;
  Circuit c(num_qubits);
  append_u_bell(c, j, lambda, slice);
  return c;
}

long GateCount::total() const {
  long t = 0;
  for (long v : per_kind) t += v;
  return t;
}

GateCount& GateCount::operator+=(const GateCount& o) {
  for (std::size_t i = 0; i < kNumGateKinds; ++i) per_kind[i] += o.per_kind[i];
  cnot_after_decomposition += o.cnot_after_decomposition;
  return *this;
}

GateCount count(const Circuit& circuit) {
  GateCount gc;
  for (const Gate& g : circuit.gates()) {
    ++gc.per_kind[static_cast<std::size_t>(g.kind)];
    gc.cnot_after_decomposition += decomposed_cnot_count(g, circuit.num_qubits());
  }
  return gc;
}

Eigen::MatrixXcd dense_unitary(const Circuit& circuit) {
  const int nq = circuit.num_qubits();
  if (nq > kDenseQubitGuard) {
    throw NumericalGuard("dense_unitary refuses " + std::to_string(nq) + " qubits (limit " +
                         std::to_string(kDenseQubitGuard) + ")");
  }
  const std::uint64_t dim = std::uint64_t{1} << nq;
  Eigen::MatrixXcd u(dim, dim);
  for (std::uint64_t col = 0; col < dim; ++col) {
    StateVector s = prepare_basis_state(nq, col);
    apply_circuit(s, circuit);
    for (std::uint64_t row = 0; row < dim; ++row) u(row, col) = s[row];
  }
  return u;
}

void write_circuit_text(std::ostream& os, const Circuit& c) {
  os << "qubits " << c.num_qubits() << '\n';
  char buf[64];
  for (const Gate& g : c.gates()) {
    os << gate_kind_name(g.kind) << ' ';
    if (gate_kind_has_angle(g.kind)) {
      std::snprintf(buf, sizeof buf, "%.17g", g.angle);
      os << buf;
    } else {
      os << '-';
    }
    os << ' ' << join(g.controls) << "->" << join(g.targets) << '\n';
  }
}

std::string circuit_to_text(const Circuit& c) {
  std::ostringstream os;
  write_circuit_text(os, c);
  return os.str();
}

Circuit parse_circuit_text(std::istream& is) {
  std::string line;
  int line_no = 0;
  int nq = -1;
  Circuit c;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string kind, angle, wires;
    ls >> kind;
    if (nq < 0) {
      if (kind != "qubits" || !(ls >> nq) || nq < 0) {
        throw ParseError("circuit line " + std::to_string(line_no) +
                         ": expected 'qubits N' header");
      }
      c = Circuit(nq);
      continue;
    }
    if (!(ls >> angle >> wires)) {
      throw ParseError("circuit line " + std::to_string(line_no) + ": expected 3 fields");
    }
    const auto arrow = wires.find("->");
    if (arrow == std::string::npos) {
      throw ParseError("circuit line " + std::to_string(line_no) + ": missing '->'");
    }
    Gate g;
    g.kind = gate_kind_from_name(kind);
    if (gate_kind_has_angle(g.kind)) {
      try {
        g.angle = std::stod(angle);
      } catch (const std::exception&) {
        throw ParseError("circuit line " + std::to_string(line_no) + ": bad angle '" + angle +
                         "'");
      }
    } else if (angle != "-") {
      throw ParseError("circuit line " + std::to_string(line_no) + ": " + kind +
                       " takes no angle");
    }
    g.controls = split_ints(wires.substr(0, arrow), line_no);
    g.targets = split_ints(wires.substr(arrow + 2), line_no);
    try {
      c.add(std::move(g));
    } catch (const InvalidGate& e) {
      throw ParseError("circuit line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (nq < 0) throw ParseError("empty circuit file");
  return c;
}

}  // namespace leeq
