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
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "leeq/diffops.hpp"
#include "leeq/errors.hpp"

using namespace leeq;
using leeq::testing::exp_of;
using leeq::testing::spectral;

namespace {

std::vector<int> slice_of(int n) {
  std::vector<int> v;
  for (int i = 0; i < n; ++i) v.push_back(i);
  return v;
}

SparseOperator kron_power(const SparseOperator& op, int times) {
  SparseOperator out = SparseOperator::identity(1);
  for (int i = 0; i < times; ++i) out = kron(out, op);
  return out;
}

}  // namespace

TEST_CASE("shift operators") {
  const auto m1 = shift(1, ShiftDirection::Minus).to_dense();
  CHECK(m1(0, 1) == cplx(1.0));
  CHECK(m1(0, 0) == cplx(0.0));
  CHECK(m1(1, 0) == cplx(0.0));
  CHECK(m1(1, 1) == cplx(0.0));

  CVec e2 = CVec::Zero(4);
  e2(2) = 1.0;
  const CVec moved = shift(2, ShiftDirection::Minus).apply(e2);
  CHECK(moved(1) == cplx(1.0));
  CHECK(moved.norm() == doctest::Approx(1.0));

  for (int n = 1; n <= 4; ++n) {
    CHECK(shift(n, ShiftDirection::Plus).nonzeros() == (1 << n) - 1);
    CHECK(shift(n, ShiftDirection::Plus).max_abs_diff(shift(n, ShiftDirection::Minus).transpose()) == 0.0);
  }
  CHECK_THROWS_AS(shift(0, ShiftDirection::Plus), BoundsError);
}

TEST_CASE("shift equals its sigma tensor decomposition") {
  const int n = 3;
  SparseOperator sum(8);
  for (int j = 1; j <= n; ++j) {
    sum = sum + kron(SparseOperator::identity(1 << (n - j)),
                     kron(sigma(0, 1), kron_power(sigma(1, 0), j - 1)));
  }
  CHECK(sum.max_abs_diff(shift(n, ShiftDirection::Minus)) == 0.0);
}

TEST_CASE("difference operators") {
  const auto d = diff(2, 0.5, DiffScheme::Central, BoundaryCondition::Dirichlet).to_dense();
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      const double expect = c == r + 1 ? 1.0 : (c == r - 1 ? -1.0 : 0.0);
      CHECK(d(r, c) == cplx(expect));
    }
  }
  const auto p = diff(2, 0.5, DiffScheme::Central, BoundaryCondition::Periodic);
  CHECK(p.coeff(0, 3) == cplx(-1.0));
  CHECK(p.coeff(3, 0) == cplx(1.0));
  CHECK_THROWS_AS(diff(2, 0.5, DiffScheme::Forward, BoundaryCondition::Periodic), Unsupported);
}

TEST_CASE("central operators are anti-symmetric") {
  for (int n = 1; n <= 5; ++n) {
    for (auto bc : {BoundaryCondition::Dirichlet, BoundaryCondition::Periodic}) {
      const auto m = diff(n, 0.3, DiffScheme::Central, bc);
      CHECK((m + m.transpose()).nonzeros() == 0);
      const auto h = m * cplx(0, 1);
      CHECK(h.max_abs_diff(h.adjoint()) == 0.0);
    }
  }
}

TEST_CASE("scheme consistency and row sums") {
  const int n = 4;
  const double l = 0.7;
  const auto f = diff(n, l, DiffScheme::Forward, BoundaryCondition::Dirichlet).to_dense();
  const auto b = diff(n, l, DiffScheme::Backward, BoundaryCondition::Dirichlet).to_dense();
  const auto c = diff(n, l, DiffScheme::Central, BoundaryCondition::Dirichlet).to_dense();
  const Eigen::MatrixXcd resid = f + b - 2.0 * c;
  for (int r = 0; r < 16; ++r) {
    for (int k = 0; k < 16; ++k) {
      if (r > 0 && r < 15) CHECK(std::abs(resid(r, k)) < 1e-15);
    }
    const cplx rs = c.row(r).sum();
    if (r > 0 && r < 15) {
      CHECK(std::abs(rs) < 1e-15);
    } else {
      CHECK(std::abs(rs) > 0.0);
    }
  }
  // Forward minus backward is the scaled second difference; on interior rows
  // it equals l * (S- - 2I + S+)/l^2.
  const Eigen::MatrixXcd fb = f - b;
  CHECK(std::abs(fb(5, 5) - cplx(-2.0 / l)) < 1e-14);
  CHECK(std::abs(fb(5, 6) - cplx(1.0 / l)) < 1e-14);
}

TEST_CASE("diff terms sum to the central operator") {
  for (int n = 1; n <= 4; ++n) {
    SparseOperator sum(1 << n);
    for (int j = 1; j <= n; ++j) sum = sum + diff_term(n, j, 0.25);
    CHECK(sum.max_abs_diff(diff(n, 0.25, DiffScheme::Central, BoundaryCondition::Dirichlet)) < 1e-15);
  }
}

TEST_CASE("lift") {
  const GridSpec g{3, 2, 1.0};
  CHECK(lift(SparseOperator::identity(8), Axis::X, g, 2).max_abs_diff(SparseOperator::identity(128)) == 0.0);
  const auto dx = lift(diff(3, 1.0, DiffScheme::Central, BoundaryCondition::Dirichlet), Axis::X, g, 0);
  const auto dy = lift(diff(2, 1.0, DiffScheme::Central, BoundaryCondition::Dirichlet), Axis::Y, g, 0);
  CHECK(commutator(dx, dy).nonzeros() == 0);
  CHECK_THROWS_AS(lift(SparseOperator::identity(4), Axis::X, g, 0), DimensionMismatch);

  // Linear ramp f(x, y) = x: interior derivative is one.
  const GridSpec g3{3, 3, 1.0};
  const auto d3 = lift(diff(3, 1.0, DiffScheme::Central, BoundaryCondition::Dirichlet), Axis::X, g3, 0);
  CVec ramp(64);
  for (int x = 0; x < 8; ++x) {
    for (int y = 0; y < 8; ++y) ramp(x * 8 + y) = x;
  }
  const CVec out = d3.apply(ramp);
  for (int x = 1; x < 7; ++x) {
    for (int y = 0; y < 8; ++y) CHECK(std::abs(out(x * 8 + y) - cplx(1.0)) < 1e-15);
  }
}

TEST_CASE("each j-group of the evolution circuit is an exact exponential") {
  for (int n = 2; n <= 4; ++n) {
    const auto s = slice_of(n);
    for (int j = 1; j <= n; ++j) {
      Circuit c(n);
      append_diff_group(c, j, 0.37, 0.5, s);
      const auto ref = exp_of(diff_term(n, j, 0.5), 0.37);
      CHECK(spectral(dense_unitary(c) - ref) < 1e-12);
    }
  }
}

TEST_CASE("evolution circuit is a first-order product formula") {
  for (int n = 2; n <= 4; ++n) {
    const auto s = slice_of(n);
    CHECK((dense_unitary(diff_evolution_circuit(n, 0.0, 1.0, BoundaryCondition::Dirichlet, s)) -
           Eigen::MatrixXcd::Identity(1 << n, 1 << n))
              .norm() < 1e-15);
    for (auto bc : {BoundaryCondition::Dirichlet, BoundaryCondition::Periodic}) {
      const auto d = diff(n, 1.0, DiffScheme::Central, bc);
      std::vector<double> errs;
      for (double gamma : {0.1, 0.05, 0.025, 0.0125}) {
        errs.push_back(spectral(dense_unitary(diff_evolution_circuit(n, gamma, 1.0, bc, s)) -
                                exp_of(d, gamma)));
      }
      // Error constant C = err / gamma^2 settles under halving.
      for (std::size_t i = 1; i < errs.size(); ++i) {
        const double ratio = errs[i - 1] / errs[i];
        CHECK(ratio > 3.5);
        CHECK(ratio < 4.5);
      }
    }
  }
}

TEST_CASE("periodic corner sign against the sparse oracle") {
  // Corner factor alone: X-wrapped group with the negated angle.
  const int n = 3;
  const auto s = slice_of(n);
  const auto full = diff_evolution_circuit(n, 0.2, 1.0, BoundaryCondition::Periodic, s);
  const auto base = diff_evolution_circuit(n, 0.2, 1.0, BoundaryCondition::Dirichlet, s);
  Circuit corner(n);
  for (std::size_t i = 0; i < full.size() - base.size(); ++i) corner.add(full.gates()[i]);
  CHECK(spectral(dense_unitary(corner) - exp_of(periodic_corner(n, 1.0), 0.2)) < 1e-12);
  CHECK(spectral(dense_unitary(corner) - exp_of(periodic_corner(n, 1.0), -0.2)) > 1e-3);
}

TEST_CASE("first-order Trotter error is within the commutator bound") {
  const int n = 3;
  const double gamma = 0.05;
  const auto d = diff(n, 1.0, DiffScheme::Central, BoundaryCondition::Periodic);
  std::vector<SparseOperator> parts = {periodic_corner(n, 1.0)};
  for (int j = 1; j <= n; ++j) parts.push_back(diff_term(n, j, 1.0));
  double bound = 0.0;
  for (std::size_t a = 0; a < parts.size(); ++a) {
    for (std::size_t b = a + 1; b < parts.size(); ++b) {
      bound += spectral(commutator(parts[a], parts[b]).to_dense());
    }
  }
  bound *= gamma * gamma / 2;
  const double err = spectral(
      dense_unitary(diff_evolution_circuit(n, gamma, 1.0, BoundaryCondition::Periodic, slice_of(n))) -
      exp_of(d, gamma));
  CHECK(err <= bound);
}

TEST_CASE("coordinate export format") {
  std::ostringstream os;
  write_coo(os, diff(1, 0.5, DiffScheme::Central, BoundaryCondition::Dirichlet));
  CHECK(os.str() == "0 1 1 0\n1 0 -1 0\n");
}
