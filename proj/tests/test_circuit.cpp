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

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "leeq/circuit.hpp"
#include "leeq/errors.hpp"
#include "leeq/lee.hpp"

using namespace leeq;
using leeq::testing::phase_distance;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<int> iota_vec(int from, int count) {
  std::vector<int> v;
  for (int i = 0; i < count; ++i) v.push_back(from + i);
  return v;
}

Circuit one(int nq, Gate g) {
  Circuit c(nq);
  c.add(std::move(g));
  return c;
}

long cnots(const Circuit& c) {
  long n = 0;
  for (const auto& g : c.gates()) n += g.kind == GateKind::CNOT;
  return n;
}

bool basis_only(const Circuit& c) {
  for (const auto& g : c.gates()) {
    switch (g.kind) {
      case GateKind::CNOT:
      case GateKind::RZ:
      case GateKind::RY:
      case GateKind::H:
      case GateKind::P:
      case GateKind::X: break;
      default: return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("u_bell structure") {
  const auto slice = iota_vec(0, 3);
  const Circuit c1 = u_bell(1, -kPi / 2, slice);
  REQUIRE(c1.size() == 2);
  CHECK(c1.gates()[0].kind == GateKind::H);
  CHECK(c1.gates()[1].kind == GateKind::P);
  CHECK(c1.gates()[1].angle == doctest::Approx(-kPi / 2));

  for (int j = 1; j <= 3; ++j) {
    CHECK(count(u_bell(j, 0.3, slice))[GateKind::CNOT] == j - 1);
  }
}

TEST_CASE("u_bell maps |0>|11> into the modified Bell pair") {
  const auto u = dense_unitary(u_bell(3, -kPi / 2, iota_vec(0, 3)));
  // Input: top qubit 0, lower two qubits 1 -> index 0b011.
  const Eigen::VectorXcd out = u.col(0b011);
  const double h = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(out(0b011) - cplx(h, 0)) < 1e-12);
  CHECK(std::abs(out(0b100) - cplx(0, -h)) < 1e-12);
  CHECK(out.norm() == doctest::Approx(1.0));
}

TEST_CASE("u_bell followed by its inverse is the identity") {
  const auto slice = iota_vec(0, 3);
  Circuit c(3);
  append_u_bell(c, 3, -kPi / 2, slice);
  append_u_bell_dagger(c, 3, -kPi / 2, slice);
  CHECK((dense_unitary(c) - Eigen::MatrixXcd::Identity(8, 8)).norm() < 1e-12);
  CHECK(c.dagger().dagger() == c);
}

TEST_CASE("gate validation") {
  CHECK_THROWS_AS(mcrz(0.1, {1, 2}, 2), InvalidGate);
  CHECK_THROWS_AS(mcrz(0.1, {1, 1}, 0), InvalidGate);
  CHECK_THROWS_AS(mcrzz(0.1, {0}, 1, 1), InvalidGate);
  CHECK_THROWS_AS(mcrzz(0.1, {1}, 1, 2), InvalidGate);
  Circuit c(2);
  CHECK_THROWS_AS(c.add(x_gate(2)), InvalidGate);
  CHECK(mcrz(0.4, {}, 3).kind == GateKind::RZ);
  CHECK(mcrzz(0.4, {}, 1, 3).kind == GateKind::RZZ);
}

TEST_CASE("MCRZ dense matrix is diagonal and fires only on satisfied controls") {
  const double g = 0.7;
  const auto u = dense_unitary(one(3, mcrz(g, {0, 1}, 2)));
  for (int r = 0; r < 8; ++r) {
    for (int col = 0; col < 8; ++col) {
      if (r != col) CHECK(std::abs(u(r, col)) == 0.0);
    }
    cplx expect = 1.0;
    if ((r & 0b011) == 0b011) expect = std::exp(cplx(0, (r & 0b100) ? g / 2 : -g / 2));
    CHECK(std::abs(u(r, r) - expect) < 1e-15);
  }
  CHECK((dense_unitary(one(3, mcrz(0.0, {0, 1}, 2))) - Eigen::MatrixXcd::Identity(8, 8))
            .norm() < 1e-15);
}

TEST_CASE("MCRZZ conventions") {
  const double g = 0.9;
  // Without controls and t2 in |0>, the action on t1 is RZ(g).
  const auto u = dense_unitary(one(2, mcrzz(g, {}, 0, 1)));
  const auto rz = dense_unitary(one(1, rz_gate(g, 0)));
  CHECK(std::abs(u(0, 0) - rz(0, 0)) < 1e-15);
  CHECK(std::abs(u(1, 1) - rz(1, 1)) < 1e-15);
  // Two full turns: the identity.
  const auto full = dense_unitary(one(3, mcrzz(4 * kPi, {2}, 0, 1)));
  CHECK(phase_distance(full, Eigen::MatrixXcd::Identity(8, 8)) < 1e-12);
}

TEST_CASE("decompose: single gates against dense unitaries") {
  SUBCASE("controlled RZ uses two CNOTs") {
    const Circuit c = one(2, mcrz(0.37, {0}, 1));
    const Circuit d = decompose(c);
    CHECK(cnots(d) == 2);
    CHECK(phase_distance(dense_unitary(c), dense_unitary(d)) < 1e-12);
  }
  SUBCASE("CNOT-only circuits are unchanged") {
    Circuit c(3);
    c.add(cnot_gate(0, 1));
    c.add(cnot_gate(2, 0));
    CHECK(decompose(c) == c);
  }
  SUBCASE("MCRZ with many controls, with and without spare qubits") {
    for (int nq = 3; nq <= 8; ++nq) {
      for (int k = 2; k < nq; ++k) {
        const Circuit c = one(nq, mcrz(0.41 + k, iota_vec(0, k), nq - 1));
        const Circuit d = decompose(c);
        CHECK(basis_only(d));
        CHECK(phase_distance(dense_unitary(c), dense_unitary(d)) < 1e-9);
      }
    }
  }
  SUBCASE("MCRZZ is two MCRZ with one more control") {
    for (int k = 0; k <= 4; ++k) {
      const int nq = k + 4;
      const Circuit c = one(nq, mcrzz(1.3, iota_vec(2, k), 0, 1));
      const Circuit d = decompose(c);
      CHECK(phase_distance(dense_unitary(c), dense_unitary(d)) < 1e-9);
      if (k > 0) {
        std::vector<int> ctl = iota_vec(2, k);
        ctl.push_back(0);
        const long single = decomposed_cnot_count(mcrz(1.3, ctl, 1), nq);
        CHECK(cnots(d) == 2 * single);
        long xs = 0;
        for (const auto& g : d.gates()) xs += g.kind == GateKind::X;
        CHECK(xs >= 2);
      }
    }
  }
  SUBCASE("CRY") {
    const Circuit c = one(2, cry_gate(-0.8, 1, 0));
    CHECK(phase_distance(dense_unitary(c), dense_unitary(decompose(c))) < 1e-12);
  }
}

TEST_CASE("decompose: CNOT count of MCRZ is linear in the control count") {
  std::vector<long> counts;
  for (int k = 3; k <= 12; ++k) counts.push_back(decomposed_cnot_count(mcrz(0.1, iota_vec(0, k), 30), 31));
  for (std::size_t i = 1; i < counts.size(); ++i) CHECK(counts[i] - counts[i - 1] == counts[1] - counts[0]);
}

TEST_CASE("decompose preserves random circuits up to global phase") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> ang(-kPi, kPi);
  for (int trial = 0; trial < 100; ++trial) {
    const int nq = 4 + trial % 5;
    std::vector<int> q = iota_vec(0, nq);
    std::shuffle(q.begin(), q.end(), rng);
    Circuit c(nq);
    const int k = static_cast<int>(rng() % static_cast<unsigned>(nq - 2));
    c.add(h_gate(q[0]));
    c.add(mcrz(ang(rng), std::vector<int>(q.begin() + 2, q.begin() + 2 + k), q[0]));
    c.add(mcrzz(ang(rng), std::vector<int>(q.begin() + 2, q.begin() + 2 + k), q[0], q[1]));
    c.add(cry_gate(ang(rng), q[1], q[0]));
    c.add(rzz_gate(ang(rng), q[1], q[nq - 1]));
    CHECK(phase_distance(dense_unitary(c), dense_unitary(decompose(c))) < 1e-9);
  }
}

TEST_CASE("count is additive") {
  const LeeParams p{1.0, 1.0, 1.0};
  const GridSpec g{3, 3, 0.5};
  const Circuit a = trotter_step(p, g, 0.05, BoundaryCondition::Dirichlet, nullptr, StepScheme::Central);
  const Circuit b = trotter_step(p, g, 0.05, BoundaryCondition::Periodic, nullptr, StepScheme::Central);
  Circuit ab = a;
  ab.append(b);
  CHECK(count(ab) == count(a) + count(b));
  CHECK(count(Circuit(4)) == GateCount{});
}

TEST_CASE("one central step at n=3 stays within the envelope order") {
  const Circuit v = trotter_step({1.0, 1.0, 1.0}, {3, 3, 0.25}, 0.05, BoundaryCondition::Dirichlet,
                                 nullptr, StepScheme::Central);
  const GateCount gc = count(v);
  CHECK(gc.cnot_after_decomposition <= 3100);
  CHECK(gc.cnot_after_decomposition == cnots(decompose(v)));
}

TEST_CASE("dense_unitary basics and guard") {
  CHECK((dense_unitary(Circuit(2)) - Eigen::MatrixXcd::Identity(4, 4)).norm() == 0.0);
  const auto x = dense_unitary(one(1, x_gate(0)));
  CHECK(x(0, 1) == cplx(1.0));
  CHECK(x(1, 0) == cplx(1.0));
  CHECK(x(0, 0) == cplx(0.0));
  CHECK_THROWS_AS(dense_unitary(Circuit(15)), NumericalGuard);
}

TEST_CASE("circuit text format is frozen") {
  Circuit c(3);
  c.add(h_gate(2));
  c.add(p_gate(-kPi / 2, 2));
  c.add(cnot_gate(2, 0));
  c.add(mcrzz(0.125, {0}, 1, 2));
  c.add(rz_gate(-0.1, 1));
  const std::string golden =
      "qubits 3\n"
      "H - ->2\n"
      "P -1.5707963267948966 ->2\n"
      "CNOT - 2->0\n"
      "MCRZZ 0.125 0->1,2\n"
      "RZ -0.10000000000000001 ->1\n";
  CHECK(circuit_to_text(c) == golden);
  std::istringstream is(golden);
  CHECK(parse_circuit_text(is) == c);

  std::istringstream bad("qubits 2\nFOO 1 ->0\n");
  CHECK_THROWS_AS(parse_circuit_text(bad), ParseError);
  std::istringstream clash("qubits 2\nCNOT - 0->0\n");
  CHECK_THROWS_AS(parse_circuit_text(clash), ParseError);
}
