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

#include <vector>

#include <Eigen/Dense>

#include "leeq/sparse.hpp"

namespace leeq {

/// Dense operators above this dimension are refused.
inline constexpr std::int64_t kDenseDimGuard = std::int64_t{1} << 14;
/// expm_apply switches from the dense exponential to Krylov above this size.
inline constexpr std::int64_t kDenseExpmDim = 256;

/// exp(M t) by scaling and squaring.
Eigen::MatrixXcd expm_dense(const Eigen::MatrixXcd& m, double t);

/// exp(A t) f0. Dense for small operators, Arnoldi otherwise.
CVec expm_apply(const SparseOperator& a, const CVec& f0, double t);

struct KrylovOptions {
  int basis_size = 30;
  /// Substeps are chosen so that ||A||_inf * h stays below this.
  double max_norm_step = 2.0;
};
CVec krylov_expm_apply(const SparseOperator& a, const CVec& f0, double t,
                       const KrylovOptions& opts = {});

/// Largest singular value by power iteration on M^dagger M.
double operator_norm(const Eigen::MatrixXcd& m, double rel_tol = 1e-8, int max_iter = 100000);

struct FdmSnapshot {
  int step = 0;
  double time = 0.0;
  double norm = 0.0;
  CVec state;
};

struct FdmResult {
  std::vector<FdmSnapshot> snapshots;
  /// Norm grew beyond kDivergenceFactor times the initial norm.
  bool diverged = false;
  int diverged_at_step = -1;
  bool non_finite = false;
  /// Largest norm(step) / norm(0) seen.
  double max_growth = 1.0;
};

inline constexpr double kDivergenceFactor = 10.0;

/// Plain forward Euler f <- f + tau A f with no renormalization. Stops early
/// once values become non-finite, keeping the snapshots taken so far.
FdmResult fdm_evolve(const SparseOperator& a, const CVec& f0, double tau, int steps,
                     int snapshot_every);

}  // namespace leeq
