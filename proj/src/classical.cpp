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

#include "leeq/classical.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

#include "leeq/errors.hpp"

namespace leeq {

namespace {

double inf_norm(const SparseOperator& a) {
  double worst = 0.0;
  const auto& m = a.matrix();
  for (std::int64_t r = 0; r < m.outerSize(); ++r) {
    double s = 0.0;
    for (SparseOperator::Storage::InnerIterator it(m, r); it; ++it) s += std::abs(it.value());
    worst = std::max(worst, s);
  }
  return worst;
}

}  // namespace

Eigen::MatrixXcd expm_dense(const Eigen::MatrixXcd& m, double t) {
  if (m.rows() != m.cols()) throw DimensionMismatch("expm needs a square matrix");
  if (m.rows() > kDenseDimGuard) throw NumericalGuard("matrix too large for a dense exponential");
  if (t == 0.0) return Eigen::MatrixXcd::Identity(m.rows(), m.cols());
  const Eigen::MatrixXcd scaled = m * t;
  return scaled.exp();
}

CVec krylov_expm_apply(const SparseOperator& a, const CVec& f0, double t,
                       const KrylovOptions& opts) {
  const std::int64_t n = a.dim();
  if (f0.size() != n) throw DimensionMismatch("vector does not match operator");
  if (t == 0.0) return f0;
  const double anorm = inf_norm(a);
  const int substeps =
      std::max(1, static_cast<int>(std::ceil(anorm * std::abs(t) / opts.max_norm_step)));
  const double h = t / substeps;
  const int m = static_cast<int>(std::min<std::int64_t>(opts.basis_size, n));

  CVec w = f0;
  Eigen::MatrixXcd v(n, m + 1);
  for (int step = 0; step < substeps; ++step) {
    const double beta = w.norm();
    if (beta == 0.0) return w;
    v.setZero();
    Eigen::MatrixXcd hm = Eigen::MatrixXcd::Zero(m + 1, m);
    v.col(0) = w / beta;
    int k = m;
    for (int j = 0; j < m; ++j) {
      CVec p = a.apply(v.col(j));
      // Modified Gram-Schmidt, repeated once for stability.
      for (int pass = 0; pass < 2; ++pass) {
        for (int i = 0; i <= j; ++i) {
          const cplx hij = v.col(i).dot(p);
          hm(i, j) += hij;
          p -= hij * v.col(i);
        }
      }
      const double nrm = p.norm();
      hm(j + 1, j) = nrm;
      if (nrm < 1e-13 * std::max(1.0, anorm)) {  // invariant subspace found
        k = j + 1;
        break;
      }
      v.col(j + 1) = p / nrm;
    }
    const Eigen::MatrixXcd small = expm_dense(hm.topLeftCorner(k, k), h);
    w = beta * (v.leftCols(k) * small.col(0));
  }
  return w;
}

CVec expm_apply(const SparseOperator& a, const CVec& f0, double t) {
  if (f0.size() != a.dim()) throw DimensionMismatch("vector does not match operator");
  if (t == 0.0) return f0;
  if (a.dim() <= kDenseExpmDim) return expm_dense(a.to_dense(), t) * f0;
  return krylov_expm_apply(a, f0, t);
}

double operator_norm(const Eigen::MatrixXcd& m, double rel_tol, int max_iter) {
  if (m.rows() > kDenseDimGuard || m.cols() > kDenseDimGuard) {
    throw NumericalGuard("matrix too large for the dense norm");
  }
  if (m.size() == 0) return 0.0;
  const Eigen::MatrixXcd g = m.adjoint() * m;
  // Deterministic start with weight on every direction.
  CVec x(g.cols());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    x(i) = cplx{1.0 + 0.37 * std::sin(1.0 + i), 0.21 * std::cos(3.0 * i)};
  }
  x.normalize();
  double lambda = 0.0;
  double residual = 0.0;
  for (int it = 0; it < max_iter; ++it) {
    CVec y = g * x;
    const double ny = y.norm();
    if (ny == 0.0) return 0.0;
    const double next = x.dot(y).real();
    residual = (y - next * x).norm() / ny;
    x = y / ny;
    // The Rayleigh quotient of a Hermitian matrix converges quadratically in
    // the vector error, so stagnation well below rel_tol is a safe stop.
    if (it > 0 && (std::abs(next - lambda) <= rel_tol * std::abs(next) * 1e-3 ||
                   residual < rel_tol * 1e-3)) {
      return std::sqrt(std::max(next, 0.0));
    }
    lambda = next;
  }
  throw ConvergenceError("power iteration did not converge (residual " +
                         std::to_string(residual) + ")");
}

FdmResult fdm_evolve(const SparseOperator& a, const CVec& f0, double tau, int steps,
                     int snapshot_every) {
  if (f0.size() != a.dim()) throw DimensionMismatch("vector does not match operator");
  if (steps < 0 || snapshot_every < 1) throw BoundsError("bad FDM schedule");
  FdmResult r;
  const double n0 = f0.norm();
  CVec f = f0;
  r.snapshots.push_back({0, 0.0, n0, f});
  for (int s = 1; s <= steps; ++s) {
    f += tau * a.apply(f);
    const double nrm = f.norm();
    if (!std::isfinite(nrm)) {
      r.non_finite = true;
      r.diverged = true;
      if (r.diverged_at_step < 0) r.diverged_at_step = s;
      break;
    }
    if (n0 > 0.0) r.max_growth = std::max(r.max_growth, nrm / n0);
    if (!r.diverged && nrm > kDivergenceFactor * n0) {
      r.diverged = true;
      r.diverged_at_step = s;
    }
    if (s % snapshot_every == 0 || s == steps) r.snapshots.push_back({s, s * tau, nrm, f});
  }
  return r;
}

}  // namespace leeq
