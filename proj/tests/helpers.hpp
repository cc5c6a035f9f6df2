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
#include <random>

#include <Eigen/Dense>

#include "leeq/circuit.hpp"
#include "leeq/classical.hpp"
#include "leeq/sparse.hpp"
#include "leeq/statevector.hpp"

namespace leeq::testing {

/// Spectral-norm distance after removing the best global phase.
inline double phase_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  const cplx overlap = (b.adjoint() * a).trace();
  const cplx phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : cplx{1.0, 0.0};
  return (a - phase * b).jacobiSvd().singularValues()(0);
}

inline double spectral(const Eigen::MatrixXcd& m) {
  if (m.size() == 0) return 0.0;
  return m.jacobiSvd().singularValues()(0);
}

/// Reference exp(A t) as a dense matrix.
inline Eigen::MatrixXcd exp_of(const SparseOperator& a, double t) {
  return expm_dense(a.to_dense(), t);
}

inline StateVector random_state(int num_qubits, std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  std::vector<cplx> amps(std::size_t{1} << num_qubits);
  for (auto& a : amps) a = {nd(rng), nd(rng)};
  StateVector s(num_qubits, std::move(amps));
  s.normalize();
  return s;
}

inline CVec to_vec(const StateVector& s) {
  CVec v(static_cast<Eigen::Index>(s.dim()));
  for (std::uint64_t i = 0; i < s.dim(); ++i) v(static_cast<Eigen::Index>(i)) = s[i];
  return v;
}

}  // namespace leeq::testing
