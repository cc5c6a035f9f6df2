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
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "leeq/classical.hpp"
#include "leeq/diffops.hpp"
#include "leeq/errors.hpp"
#include "leeq/lee.hpp"

using namespace leeq;
using leeq::testing::spectral;

namespace {

SparseOperator random_sparse(int dim, int per_row, std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  std::vector<SparseOperator::Entry> e;
  for (int r = 0; r < dim; ++r) {
    for (int k = 0; k < per_row; ++k) {
      e.push_back({r, static_cast<std::int64_t>(rng() % static_cast<unsigned>(dim)),
                   cplx(nd(rng), nd(rng))});
    }
  }
  return SparseOperator(dim, e);
}

CVec random_vec(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  CVec v(dim);
  for (int i = 0; i < dim; ++i) v(i) = cplx(nd(rng), nd(rng));
  return v;
}

}  // namespace

TEST_CASE("dense exponential") {
  Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(2, 2);
  d(0, 0) = 1.0;
  d(1, 1) = -1.0;
  const auto e = expm_dense(d, 1.0);
  CHECK(std::abs(e(0, 0) - std::exp(1.0)) < 1e-14);
  CHECK(std::abs(e(1, 1) - std::exp(-1.0)) < 1e-14);
  CHECK((expm_dense(d, 0.0) - Eigen::MatrixXcd::Identity(2, 2)).norm() == 0.0);
  CHECK_THROWS_AS(expm_dense(Eigen::MatrixXcd::Zero(2, 3), 1.0), DimensionMismatch);
}

TEST_CASE("expm_apply basics") {
  Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(2, 2);
  d(0, 0) = 1.0;
  d(1, 1) = -1.0;
  CVec f(2);
  f << 1.0, 1.0;
  const CVec out = expm_apply(SparseOperator::from_dense(d), f, 1.0);
  CHECK(std::abs(out(0) - std::exp(1.0)) < 1e-14);
  CHECK(std::abs(out(1) - std::exp(-1.0)) < 1e-14);

  std::mt19937_64 rng(8);
  const auto a = lee_generator({1.0, 1.0, 1.0}, {4, 4, 0.25}, BoundaryCondition::Dirichlet, nullptr,
                               StepScheme::Central);
  const CVec f0 = random_vec(static_cast<int>(a.dim()), rng);
  CHECK((expm_apply(a, f0, 0.0) - f0).norm() == 0.0);
  CHECK(expm_apply(a, f0, 1.3).norm() == doctest::Approx(f0.norm()).epsilon(1e-12));
  CHECK_THROWS_AS(expm_apply(a, CVec::Zero(3), 1.0), DimensionMismatch);
}

TEST_CASE("Krylov agrees with the dense exponential") {
  std::mt19937_64 rng(9);
  const auto a = lee_generator({-1.0, 1.0, 1.0}, {3, 3, 0.25}, BoundaryCondition::Periodic, nullptr,
                               StepScheme::Central);
  const CVec f0 = random_vec(static_cast<int>(a.dim()), rng);
  const CVec ref = expm_dense(a.to_dense(), 2.0) * f0;
  CHECK((krylov_expm_apply(a, f0, 2.0) - ref).norm() / ref.norm() < 1e-10);

  // Non-normal operator.
  const auto b = random_sparse(200, 3, rng) * cplx(0.3);
  const CVec g0 = random_vec(200, rng);
  const CVec gref = expm_dense(b.to_dense(), 0.7) * g0;
  CHECK((krylov_expm_apply(b, g0, 0.7) - gref).norm() / gref.norm() < 1e-10);
}

TEST_CASE("semigroup property") {
  std::mt19937_64 rng(10);
  const auto a = lee_generator({0.5, 1.0, 1.0}, {5, 4, 0.25}, BoundaryCondition::Dirichlet, nullptr,
                               StepScheme::Central);
  const CVec f = random_vec(static_cast<int>(a.dim()), rng);
  const CVec two = expm_apply(a, expm_apply(a, f, 0.4), 0.9);
  const CVec one = expm_apply(a, f, 1.3);
  CHECK((two - one).norm() / f.norm() < 1e-9);
}

TEST_CASE("operator norm") {
  CHECK(operator_norm(Eigen::MatrixXcd::Identity(5, 5)) == doctest::Approx(1.0));
  Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(2, 2);
  d(0, 0) = 3.0;
  d(1, 1) = -1.0;
  CHECK(operator_norm(d) == doctest::Approx(3.0).epsilon(1e-8));
  const auto dm = diff(3, 1.0, DiffScheme::Central, BoundaryCondition::Dirichlet).to_dense();
  CHECK(operator_norm(dm) == doctest::Approx(spectral(dm)).epsilon(1e-8));
  CHECK(operator_norm(Eigen::MatrixXcd::Zero(3, 3)) == 0.0);

  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 5; ++trial) {
    const auto a = random_sparse(24, 2, rng).to_dense();
    const auto b = random_sparse(24, 2, rng).to_dense();
    CHECK(operator_norm(a) == doctest::Approx(spectral(a)).epsilon(1e-7));
    CHECK(operator_norm(a * b) <= operator_norm(a) * operator_norm(b) * (1 + 1e-7));
  }
}

TEST_CASE("forward Euler") {
  std::mt19937_64 rng(13);
  const CVec f0 = random_vec(16, rng);
  SUBCASE("zero operator and zero steps") {
    const auto r = fdm_evolve(SparseOperator(16), f0, 0.1, 5, 1);
    CHECK(r.snapshots.size() == 6);
    CHECK((r.snapshots.back().state - f0).norm() == 0.0);
    const auto z = fdm_evolve(random_sparse(16, 2, rng), f0, 0.1, 0, 1);
    REQUIRE(z.snapshots.size() == 1);
    CHECK((z.snapshots[0].state - f0).norm() == 0.0);
  }
  SUBCASE("first-order convergence") {
    const auto a = lee_generator({1.0, 1.0, 1.0}, {3, 3, 0.5}, BoundaryCondition::Dirichlet,
                                 nullptr, StepScheme::Central);
    const CVec g0 = random_vec(static_cast<int>(a.dim()), rng);
    const CVec ref = expm_apply(a, g0, 0.4);
    std::vector<double> errs;
    for (double tau : {0.01, 0.005, 0.0025}) {
      const int steps = static_cast<int>(std::lround(0.4 / tau));
      errs.push_back((fdm_evolve(a, g0, tau, steps, steps).snapshots.back().state - ref).norm());
    }
    for (std::size_t i = 1; i < errs.size(); ++i) {
      CHECK(errs[i - 1] / errs[i] > 1.8);
      CHECK(errs[i - 1] / errs[i] < 2.2);
    }
  }
  SUBCASE("growth is flagged, not hidden") {
    const auto a = SparseOperator::identity(16) * cplx(5.0);
    const auto r = fdm_evolve(a, f0, 0.5, 10, 1);
    CHECK(r.diverged);
    CHECK(r.diverged_at_step == 2);
    CHECK(r.max_growth > kDivergenceFactor);
    CHECK(r.snapshots.back().step == 10);
  }
  SUBCASE("non-finite values stop the run") {
    const auto a = SparseOperator::identity(16) * cplx(1e300);
    const auto r = fdm_evolve(a, f0, 1e10, 50, 1);
    CHECK(r.non_finite);
    CHECK(r.snapshots.size() < 51);
  }
}
