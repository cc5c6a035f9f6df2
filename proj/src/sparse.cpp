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

#include "leeq/sparse.hpp"

#include <cstdio>
#include <ostream>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>

#include "leeq/errors.hpp"

namespace leeq {

namespace {

using Triplet = Eigen::Triplet<cplx, std::int64_t>;

void check_same_dim(const SparseOperator& a, const SparseOperator& b, const char* what) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch(std::string(what) + ": dimensions " + std::to_string(a.dim()) +
                            " and " + std::to_string(b.dim()));
  }
}

}  // namespace

SparseOperator::SparseOperator(std::int64_t dim) : mat_(dim, dim) {
  if (dim < 0) throw DimensionMismatch("negative dimension");
}

SparseOperator::SparseOperator(std::int64_t dim, const std::vector<Entry>& entries)
    : mat_(dim, dim) {
  std::vector<Triplet> t;
  t.reserve(entries.size());
  for (const auto& e : entries) {
    if (e.row < 0 || e.col < 0 || e.row >= dim || e.col >= dim) {
      throw BoundsError("sparse entry (" + std::to_string(e.row) + "," + std::to_string(e.col) +
                        ") outside dimension " + std::to_string(dim));
    }
    t.emplace_back(e.row, e.col, e.value);
  }
  mat_.setFromTriplets(t.begin(), t.end());
  prune();
}

SparseOperator::SparseOperator(Storage m) : mat_(std::move(m)) {
  if (mat_.rows() != mat_.cols()) throw DimensionMismatch("operator must be square");
  prune();
}

SparseOperator SparseOperator::identity(std::int64_t dim) {
  Storage m(dim, dim);
  m.setIdentity();
  return SparseOperator(std::move(m));
}

SparseOperator SparseOperator::from_dense(const Eigen::MatrixXcd& m, double drop_below) {
  if (m.rows() != m.cols()) throw DimensionMismatch("operator must be square");
  std::vector<Entry> e;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (std::abs(m(r, c)) > drop_below) e.push_back({r, c, m(r, c)});
    }
  }
  return SparseOperator(m.rows(), e);
}

void SparseOperator::prune() {
  mat_.prune([](std::int64_t, std::int64_t, const cplx& v) { return v != cplx{0.0, 0.0}; });
  mat_.makeCompressed();
}

std::vector<SparseOperator::Entry> SparseOperator::entries() const {
  std::vector<Entry> out;
  out.reserve(static_cast<std::size_t>(mat_.nonZeros()));
  for (std::int64_t r = 0; r < mat_.outerSize(); ++r) {
    for (Storage::InnerIterator it(mat_, r); it; ++it) out.push_back({r, it.col(), it.value()});
  }
  return out;
}

SparseOperator SparseOperator::adjoint() const { return SparseOperator(Storage(mat_.adjoint())); }

SparseOperator SparseOperator::transpose() const {
  return SparseOperator(Storage(mat_.transpose()));
}

SparseOperator SparseOperator::operator+(const SparseOperator& o) const {
  check_same_dim(*this, o, "sum");
  return SparseOperator(Storage(mat_ + o.mat_));
}

SparseOperator SparseOperator::operator-(const SparseOperator& o) const {
  check_same_dim(*this, o, "difference");
  return SparseOperator(Storage(mat_ - o.mat_));
}

SparseOperator SparseOperator::operator*(const SparseOperator& o) const {
  check_same_dim(*this, o, "product");
  return SparseOperator(Storage(mat_ * o.mat_));
}

SparseOperator SparseOperator::operator*(cplx s) const { return SparseOperator(Storage(mat_ * s)); }

CVec SparseOperator::apply(const CVec& v) const {
  if (v.size() != dim()) {
    throw DimensionMismatch("vector length " + std::to_string(v.size()) +
                            " does not match operator dimension " + std::to_string(dim()));
  }
  return mat_ * v;
}

Eigen::MatrixXcd SparseOperator::to_dense() const { return Eigen::MatrixXcd(mat_); }

double SparseOperator::max_abs_diff(const SparseOperator& o) const {
  check_same_dim(*this, o, "comparison");
  const Storage d = mat_ - o.mat_;
  double m = 0.0;
  for (std::int64_t r = 0; r < d.outerSize(); ++r) {
    for (Storage::InnerIterator it(d, r); it; ++it) m = std::max(m, std::abs(it.value()));
  }
  return m;
}

bool SparseOperator::is_zero(double tol) const {
  for (std::int64_t r = 0; r < mat_.outerSize(); ++r) {
    for (Storage::InnerIterator it(mat_, r); it; ++it) {
      if (std::abs(it.value()) > tol) return false;
    }
  }
  return true;
}

SparseOperator kron(const SparseOperator& a, const SparseOperator& b) {
  SparseOperator::Storage out =
      Eigen::kroneckerProduct(a.matrix(), b.matrix()).eval();
  return SparseOperator(std::move(out));
}

SparseOperator commutator(const SparseOperator& a, const SparseOperator& b) {
  return a * b - b * a;
}

void write_coo(std::ostream& os, const SparseOperator& m) {
  char buf[128];
  for (const auto& e : m.entries()) {
    std::snprintf(buf, sizeof buf, "%lld %lld %.17g %.17g\n", static_cast<long long>(e.row),
                  static_cast<long long>(e.col), e.value.real(), e.value.imag());
    os << buf;
  }
}

}  // namespace leeq
