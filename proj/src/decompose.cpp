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

// Multi-controlled rotations lowered to {CNOT, RZ, RY, H, P, X}.
//
// The MCX primitive is the borrowed-qubit Toffoli ladder of Barenco et al.
// (Lemma 7.2): two full Toffolis hit the target and every inner Toffoli is
// replaced by the 3-CNOT relative-phase variant, whose phases cancel between
// the compute and uncompute halves. Borrowed qubits may hold any state and
// are returned unchanged.

#include <algorithm>
#include <numbers>
#include <string>

#include "leeq/circuit.hpp"
#include "leeq/errors.hpp"

namespace leeq {

namespace {

constexpr double kQuarterPi = std::numbers::pi / 4.0;

class Emitter {
 public:
  explicit Emitter(std::vector<Gate>& out) : out_(out) {}

  void toffoli(int a, int b, int c) {
    h(c);
    cx(b, c);
    tdg(c);
    cx(a, c);
    t(c);
    cx(b, c);
    tdg(c);
    cx(a, c);
    t(b);
    t(c);
    h(c);
    cx(a, b);
    t(a);
    tdg(b);
    cx(a, b);
  }

  // Toffoli up to a diagonal relative phase; only used in matched pairs.
  void rccx(int a, int b, int c) {
    h(c);
    t(c);
    cx(b, c);
    tdg(c);
    cx(a, c);
    t(c);
    cx(b, c);
    tdg(c);
    h(c);
  }

  void mcx(const std::vector<int>& ctrl, int target, const std::vector<int>& borrowed) {
    const int m = static_cast<int>(ctrl.size());
    if (m == 0) {
      out_.push_back(x_gate(target));
      return;
    }
    if (m == 1) {
      cx(ctrl[0], target);
      return;
    }
    if (m == 2) {
      toffoli(ctrl[0], ctrl[1], target);
      return;
    }
    if (static_cast<int>(borrowed.size()) < m - 2) {
      throw InvalidCircuit("MCX with " + std::to_string(m) + " controls needs " +
                           std::to_string(m - 2) + " borrowed qubits");
    }
    // 1-based helpers: c(i) = ctrl[i-1], a(i) = borrowed[i-1].
    auto c = [&](int i) { return ctrl[i - 1]; };
    auto a = [&](int i) { return borrowed[i - 1]; };
    auto ladder = [&] {
      for (int i = m - 1; i >= 3; --i) rccx(c(i), a(i - 2), a(i - 1));
      rccx(c(1), c(2), a(1));
      for (int i = 3; i <= m - 1; ++i) rccx(c(i), a(i - 2), a(i - 1));
    };
    for (int rep = 0; rep < 2; ++rep) {
      toffoli(c(m), a(m - 2), target);
      ladder();
    }
  }

  void mcrz(double gamma, const std::vector<int>& ctrl, int target, int num_qubits) {
    const int k = static_cast<int>(ctrl.size());
    if (k == 0) {
      out_.push_back(rz_gate(gamma, target));
      return;
    }
    if (k == 1) {
      out_.push_back(rz_gate(gamma / 2, target));
      cx(ctrl[0], target);
      out_.push_back(rz_gate(-gamma / 2, target));
      cx(ctrl[0], target);
      return;
    }
    std::vector<int> idle;
    for (int q = 0; q < num_qubits; ++q) {
      if (q != target && std::find(ctrl.begin(), ctrl.end(), q) == ctrl.end()) idle.push_back(q);
    }
    if (static_cast<int>(idle.size()) >= k - 2) {
      out_.push_back(rz_gate(gamma / 2, target));
      mcx(ctrl, target, idle);
      out_.push_back(rz_gate(-gamma / 2, target));
      mcx(ctrl, target, idle);
      return;
    }
    // Not enough spare qubits: each half borrows the other half.
    const int k1 = (k + 1) / 2;
    std::vector<int> c1(ctrl.begin(), ctrl.begin() + k1);
    std::vector<int> c2(ctrl.begin() + k1, ctrl.end());
    std::vector<int> b1 = c2, b2 = c1;
    b1.insert(b1.end(), idle.begin(), idle.end());
    b2.insert(b2.end(), idle.begin(), idle.end());
    for (int rep = 0; rep < 2; ++rep) {
      mcx(c2, target, b2);
      out_.push_back(rz_gate(-gamma / 4, target));
      mcx(c1, target, b1);
      out_.push_back(rz_gate(gamma / 4, target));
    }
  }

 private:
  void h(int q) { out_.push_back(h_gate(q)); }
  void t(int q) { out_.push_back(p_gate(kQuarterPi, q)); }
  void tdg(int q) { out_.push_back(p_gate(-kQuarterPi, q)); }
  void cx(int a, int b) { out_.push_back(cnot_gate(a, b)); }

  std::vector<Gate>& out_;
};

void lower(const Gate& g, int num_qubits, std::vector<Gate>& out) {
  Emitter e(out);
  switch (g.kind) {
    case GateKind::X:
    case GateKind::H:
    case GateKind::P:
    case GateKind::RZ:
    case GateKind::RY:
    case GateKind::CNOT:
      out.push_back(g);
      return;
    case GateKind::RZZ:
      out.push_back(cnot_gate(g.targets[0], g.targets[1]));
      out.push_back(rz_gate(g.angle, g.targets[1]));
      out.push_back(cnot_gate(g.targets[0], g.targets[1]));
      return;
    case GateKind::CRY:
      out.push_back(ry_gate(g.angle / 2, g.targets[0]));
      out.push_back(cnot_gate(g.controls[0], g.targets[0]));
      out.push_back(ry_gate(-g.angle / 2, g.targets[0]));
      out.push_back(cnot_gate(g.controls[0], g.targets[0]));
      return;
    case GateKind::MCRZ:
      e.mcrz(g.angle, g.controls, g.targets[0], num_qubits);
      return;
    case GateKind::MCRZZ: {
      const int t1 = g.targets[0], t2 = g.targets[1];
      std::vector<int> ctrl = g.controls;
      ctrl.push_back(t1);
      out.push_back(x_gate(t1));
      e.mcrz(g.angle, ctrl, t2, num_qubits);
      out.push_back(x_gate(t1));
      e.mcrz(-g.angle, ctrl, t2, num_qubits);
      return;
    }
  }
}

}  // namespace

Circuit decompose(const Circuit& circuit) {
  Circuit out(circuit.num_qubits());
  std::vector<Gate> buf;
  for (const Gate& g : circuit.gates()) {
    buf.clear();
    lower(g, circuit.num_qubits(), buf);
    for (auto& b : buf) out.add(std::move(b));
  }
  return out;
}

long decomposed_cnot_count(const Gate& g, int num_qubits) {
  std::vector<Gate> buf;
  lower(g, num_qubits, buf);
  return std::count_if(buf.begin(), buf.end(),
                       [](const Gate& b) { return b.kind == GateKind::CNOT; });
}

}  // namespace leeq
