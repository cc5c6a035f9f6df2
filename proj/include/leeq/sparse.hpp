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
#include <cstdint>
#include <iosfwd>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

namespace leeq {

using cplx = std::complex<double>;
using CVec = Eigen::VectorXcd;

/// Square sparse complex matrix. Entries are kept coordinate-sorted with
/// duplicates merged and exact zeros dropped.
class SparseOperator {
 public:
  using Storage = Eigen::SparseMatrix<cplx, Eigen::RowMajor, std::int64_t>;

  struct Entry {
    std::int64_t row;
    std::int64_t col;
    cplx value;
  };

  SparseOperator() = default;
  explicit SparseOperator(std::int64_t dim);
  SparseOperator(std::int64_t dim, const std::vector<Entry>& entries);
  explicit SparseOperator(Storage m);

  static SparseOperator identity(std::int64_t dim);
  static SparseOperator from_dense(const Eigen::MatrixXcd& m, double drop_below = 0.0);

  std::int64_t dim() const { return mat_.rows(); }
  std::int64_t nonzeros() const { return mat_.nonZeros(); }
  const Storage& matrix() const { return mat_; }
  cplx coeff(std::int64_t row, std::int64_t col) const { return mat_.coeff(row, col); }

  /// Row-major order (row, then col).
  std::vector<Entry> entries() const;

  SparseOperator adjoint() const;
  SparseOperator transpose() const;
  SparseOperator operator+(const SparseOperator& o) const;
  SparseOperator operator-(const SparseOperator& o) const;
  SparseOperator operator*(const SparseOperator& o) const;
  SparseOperator operator*(cplx s) const;
  friend SparseOperator operator*(cplx s, const SparseOperator& m) { return m * s; }
  SparseOperator operator-() const { return *this * cplx{-1.0, 0.0}; }

  CVec apply(const CVec& v) const;
  Eigen::MatrixXcd to_dense() const;

  /// Largest |entry| of this - o.
  double max_abs_diff(const SparseOperator& o) const;
  bool is_zero(double tol = 0.0) const;

 private:
  void prune();
  Storage mat_;
};

/// a (x) b with a acting on the more significant index bits.
SparseOperator kron(const SparseOperator& a, const SparseOperator& b);
SparseOperator commutator(const SparseOperator& a, const SparseOperator& b);

/// Coordinate text export: one `row col re im` line per stored entry.
void write_coo(std::ostream& os, const SparseOperator& m);

}  // namespace leeq
