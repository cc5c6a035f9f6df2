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

#include "doctest.h"
#include "helpers.hpp"
#include "leeq/errors.hpp"
#include "leeq/lee.hpp"
#include "leeq/statevector.hpp"

using namespace leeq;

TEST_CASE("basis states") {
  auto s = prepare_basis_state(1, 0);
  CHECK(s.dim() == 2);
  CHECK(s[0] == cplx(1.0));
  CHECK(s[1] == cplx(0.0));
  s = prepare_basis_state(2, 3);
  for (int i = 0; i < 3; ++i) CHECK(s[i] == cplx(0.0));
  CHECK(s[3] == cplx(1.0));
  s = prepare_basis_state(12, 0);
  CHECK(s.dim() == 4096);
  CHECK(s[0] == cplx(1.0));
  CHECK_THROWS_AS(prepare_basis_state(2, 4), BoundsError);
  CHECK_THROWS_AS(StateVector(2, std::vector<cplx>(3)), DimensionMismatch);
}

TEST_CASE("single gates") {
  auto s = prepare_basis_state(1, 0);
  apply_gate(s, x_gate(0));
  CHECK(s[1] == cplx(1.0));
  s = prepare_basis_state(1, 0);
  apply_gate(s, h_gate(0));
  CHECK(s[0].real() == doctest::Approx(1 / std::sqrt(2.0)));
  CHECK(s[1].real() == doctest::Approx(1 / std::sqrt(2.0)));

  std::mt19937_64 rng(1);
  s = leeq::testing::random_state(4, rng);
  const auto before = leeq::testing::to_vec(s);
  for (std::uint64_t i = 0; i < s.dim(); ++i) {
    if (i & 0b0110) s[i] = 0.0;
  }
  const auto masked = leeq::testing::to_vec(s);
  apply_gate(s, mcrz(0.8, {1, 2}, 0));
  CHECK((leeq::testing::to_vec(s) - masked).norm() == 0.0);
  CHECK(before.norm() == doctest::Approx(1.0));
  CHECK_THROWS_AS(apply_gate(s, x_gate(4)), InvalidGate);
}

TEST_CASE("circuits") {
  std::mt19937_64 rng(2);
  StateVector s = leeq::testing::random_state(3, rng);
  const auto v0 = leeq::testing::to_vec(s);
  apply_circuit(s, Circuit(3));
  CHECK((leeq::testing::to_vec(s) - v0).norm() == 0.0);
  Circuit xx(3);
  xx.add(x_gate(0));
  xx.add(x_gate(0));
  apply_circuit(s, xx);
  CHECK((leeq::testing::to_vec(s) - v0).norm() == 0.0);

  const std::vector<int> slice{0, 1, 2};
  Circuit uu(3);
  append_u_bell(uu, 3, -std::numbers::pi / 2, slice);
  append_u_bell_dagger(uu, 3, -std::numbers::pi / 2, slice);
  apply_circuit(s, uu);
  CHECK((leeq::testing::to_vec(s) - v0).norm() < 1e-12);
  CHECK_THROWS_AS(apply_circuit(s, Circuit(4)), InvalidCircuit);
}

TEST_CASE("kernels agree with dense unitaries") {
  std::mt19937_64 rng(3);
  const double g = 0.61;
  const std::vector<Gate> gates = {h_gate(2),          p_gate(g, 1),           rz_gate(g, 3),
                                   ry_gate(g, 0),      rzz_gate(g, 3, 1),      cnot_gate(2, 0),
                                   mcrz(g, {0, 3}, 1), mcrzz(g, {2}, 0, 3),   cry_gate(g, 1, 2)};
  for (const auto& gate : gates) {
    Circuit c(4);
    c.add(gate);
    StateVector s = leeq::testing::random_state(4, rng);
    const CVec expect = dense_unitary(c) * leeq::testing::to_vec(s);
    apply_gate(s, gate);
    CHECK((leeq::testing::to_vec(s) - expect).norm() < 1e-14);
  }
}

TEST_CASE("unitarity and linearity of a full step") {
  const GridSpec g{3, 3, 0.25};
  const Circuit v = trotter_step({1.0, 1.0, 1.0}, g, 0.05, BoundaryCondition::Periodic, nullptr,
                                 StepScheme::Central);
  std::mt19937_64 rng(4);
  StateVector a = leeq::testing::random_state(8, rng);
  StateVector b = leeq::testing::random_state(8, rng);
  const cplx alpha(0.3, -0.2), beta(-1.1, 0.4);
  std::vector<cplx> mix(a.dim());
  for (std::uint64_t i = 0; i < a.dim(); ++i) mix[i] = alpha * a[i] + beta * b[i];
  StateVector m(8, mix);
  apply_circuit(a, v);
  apply_circuit(b, v);
  apply_circuit(m, v);
  CHECK(a.norm() == doctest::Approx(1.0).epsilon(1e-10));
  double diff = 0.0;
  for (std::uint64_t i = 0; i < a.dim(); ++i) diff += std::norm(m[i] - alpha * a[i] - beta * b[i]);
  CHECK(std::sqrt(diff) < 1e-10);
}

TEST_CASE("layout") {
  const RegisterLayout lay = RegisterLayout::lee({3, 2, 1.0});
  CHECK(lay.num_qubits() == 7);
  CHECK(lay.a1() == 6);
  CHECK(lay.a2() == 5);
  CHECK(lay.qy(1) == 0);
  CHECK(lay.qx(1) == 2);
  CHECK(lay.index_of(Component::V, 5, 2) == ((2u * 8 + 5) * 4 + 2));
  for (std::uint64_t i = 0; i < lay.dim(); ++i) {
    const auto d = lay.decode(i);
    CHECK(lay.index_of(d.component, d.x, d.y) == i);
  }
}

TEST_CASE("field extraction") {
  const GridSpec g{2, 2, 1.0};
  const RegisterLayout lay = RegisterLayout::lee(g);
  auto s = prepare_basis_state(6, lay.index_of(Component::P, 1, 2));
  FieldGrid f = extract_field(s, lay, 0.5);
  CHECK(f.p[f.at(1, 2)] == 0.5);
  double rest = 0.0;
  for (double x : f.p) rest += std::abs(x);
  for (double x : f.u) rest += std::abs(x);
  for (double x : f.v) rest += std::abs(x);
  CHECK(rest == 0.5);
  CHECK_FALSE(f.zero_sector_flag);

  s[lay.index_of(Component::Zero, 0, 0)] = 1e-6;
  s[lay.index_of(Component::U, 0, 0)] = cplx(0.0, 1e-3);
  f = extract_field(s, lay, 1.0);
  CHECK(f.zero_sector_flag);
  CHECK(f.zero_sector_norm == doctest::Approx(1e-6));
  CHECK(f.imag_residual == doctest::Approx(1e-3));
}

TEST_CASE("initial condition round trip") {
  const GridSpec g{5, 5, 0.25};
  const RegisterLayout lay = RegisterLayout::lee(g);
  const auto prep = prepare_point_source(g, {{15, 15, 2, 0.5}});
  const FieldGrid f = extract_field(prep.state, lay, prep.norm_factor);
  for (std::uint64_t y = 0; y < 32; ++y) {
    for (std::uint64_t x = 0; x < 32; ++x) {
      const bool in = x >= 15 && x <= 16 && y >= 15 && y <= 16;
      CHECK(f.p[f.at(x, y)] == doctest::Approx(in ? 0.5 : 0.0));
    }
  }
  double nf = 0.0;
  const StateVector back = encode_field(f, lay, &nf);
  CHECK(nf == doctest::Approx(prep.norm_factor));
  for (std::uint64_t i = 0; i < back.dim(); ++i) CHECK(std::abs(back[i] - prep.state[i]) < 1e-12);
}

TEST_CASE("l2 distance and energy") {
  FieldGrid a;
  a.nx_points = 2;
  a.ny_points = 2;
  a.p = a.u = a.v = std::vector<double>(4, 0.0);
  FieldGrid b = a;
  CHECK(l2_distance(a, b, Component::P) == 0.0);
  b.p[3] = 0.3;
  CHECK(l2_distance(a, b, Component::P) == doctest::Approx(0.3));
  CHECK(l2_distance(a, b, Component::U) == 0.0);
  b.u[1] = 0.4;
  CHECK(field_energy(b) == doctest::Approx(0.25));
  FieldGrid c = a;
  c.nx_points = 4;
  c.p.resize(8);
  CHECK_THROWS_AS(l2_distance(a, c, Component::P), DimensionMismatch);
}
