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

#include "leeq/obstacles.hpp"

#include <algorithm>
#include <numbers>

#include "leeq/diffops.hpp"
#include "leeq/errors.hpp"

namespace leeq {

namespace {

using u64 = std::uint64_t;

constexpr double kHalfPi = std::numbers::pi / 2.0;

u64 bits_value(const std::string& s) {
  u64 v = 0;
  for (char ch : s) v = (v << 1) | static_cast<u64>(ch == '1');
  return v;
}

void check_bits(const std::string& s, int max_len, const char* what) {
  if (s.empty() || static_cast<int>(s.size()) > max_len) {
    throw BoundsError(std::string(what) + " prefix '" + s + "' must have 1.." +
                      std::to_string(max_len) + " bits");
  }
  for (char ch : s) {
    if (ch != '0' && ch != '1') throw ParseError(std::string(what) + " prefix '" + s + "'");
  }
}

int shared_leading_bits(u64 a, u64 b, int k) {
  int p = 0;
  for (int i = k - 1; i >= 0; --i) {
    if (((a >> i) & 1) != ((b >> i) & 1)) break;
    ++p;
  }
  return p;
}

std::vector<ControlBit> controls_for(const std::string& bits, Axis axis, const GridSpec& grid) {
  const RegisterLayout lay(grid.n_x, grid.n_y, 0);
  const int n = grid.bits(axis);
  std::vector<ControlBit> out;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    out.push_back({lay.q(axis, n - static_cast<int>(i)), bits[i] - '0'});
  }
  return out;
}

Axis other(Axis a) { return a == Axis::X ? Axis::Y : Axis::X; }

// 2D prefix sums for O(1) region counts.
class MaskSums {
 public:
  explicit MaskSums(const Mask& m) : w_(m.nx_points + 1), s_((m.nx_points + 1) * (m.ny_points + 1), 0) {
    for (u64 y = 0; y < m.ny_points; ++y) {
      for (u64 x = 0; x < m.nx_points; ++x) {
        s_[(y + 1) * w_ + x + 1] = m.at(x, y) + s_[y * w_ + x + 1] + s_[(y + 1) * w_ + x] -
                                   s_[y * w_ + x];
      }
    }
  }
  u64 sum(u64 x0, u64 x1, u64 y0, u64 y1) const {
    return s_[y1 * w_ + x1] - s_[y0 * w_ + x1] - s_[y1 * w_ + x0] + s_[y0 * w_ + x0];
  }

 private:
  u64 w_;
  std::vector<u64> s_;
};

// True when some row of the region is not constant along the given axis.
bool varies(const Mask& m, Axis a, u64 x0, u64 w, u64 y0, u64 h) {
  for (u64 y = y0; y < y0 + h; ++y) {
    for (u64 x = x0; x < x0 + w; ++x) {
      const u64 ref = a == Axis::X ? m.at(x0, y) : m.at(x, y0);
      if (m.at(x, y) != ref) return true;
    }
  }
  return false;
}

void quadtree(const Mask& mask, const MaskSums& sums, const GridSpec& g, const std::string& xp,
              const std::string& yp, std::vector<BinaryCell>& out) {
  const int rx = g.n_x - static_cast<int>(xp.size());
  const int ry = g.n_y - static_cast<int>(yp.size());
  const u64 x0 = bits_value(xp) << rx, y0 = bits_value(yp) << ry;
  const u64 w = u64{1} << rx, h = u64{1} << ry;
  const u64 ones = sums.sum(x0, x0 + w, y0, y0 + h);
  if (ones == 0) return;
  const bool full = ones == w * h;
  if (full && !xp.empty() && !yp.empty()) {
    out.push_back({xp, yp});
    return;
  }
  bool split_x;
  if (full) {
    split_x = xp.empty() && (!yp.empty() || rx >= ry);
  } else {
    // Splitting an axis the region is constant along cannot separate anything.
    const bool vx = varies(mask, Axis::X, x0, w, y0, h);
    const bool vy = varies(mask, Axis::Y, x0, w, y0, h);
    split_x = vx && (!vy || rx >= ry);
  }
  if (split_x) {
    quadtree(mask, sums, g, xp + '0', yp, out);
    quadtree(mask, sums, g, xp + '1', yp, out);
  } else {
    quadtree(mask, sums, g, xp, yp + '0', out);
    quadtree(mask, sums, g, xp, yp + '1', out);
  }
}

}  // namespace

void BinaryCell::validate(const GridSpec& grid) const {
  check_bits(x_prefix, grid.n_x, "x");
  check_bits(y_prefix, grid.n_y, "y");
}

bool BinaryCell::contains(u64 x, u64 y, const GridSpec& grid) const {
  const int kx = static_cast<int>(x_prefix.size()), ky = static_cast<int>(y_prefix.size());
  return (x >> (grid.n_x - kx)) == bits_value(x_prefix) &&
         (y >> (grid.n_y - ky)) == bits_value(y_prefix);
}

std::size_t Mask::count() const {
  return static_cast<std::size_t>(std::count(bits.begin(), bits.end(), std::uint8_t{1}));
}

void ObstacleSpec::validate(const GridSpec& grid) const {
  for (const auto& c : cells) c.validate(grid);
  // Two dyadic cells overlap iff on both axes one prefix extends the other.
  auto nested = [](const std::string& a, const std::string& b) {
    const std::size_t k = std::min(a.size(), b.size());
    return a.compare(0, k, b, 0, k) == 0;
  };
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (std::size_t j = i + 1; j < cells.size(); ++j) {
      if (nested(cells[i].x_prefix, cells[j].x_prefix) &&
          nested(cells[i].y_prefix, cells[j].y_prefix)) {
        throw InvalidCircuit("obstacle cells (" + cells[i].x_prefix + "," + cells[i].y_prefix +
                             ") and (" + cells[j].x_prefix + "," + cells[j].y_prefix +
                             ") overlap");
      }
    }
  }
}

Mask ObstacleSpec::rasterize(const GridSpec& grid) const {
  validate(grid);
  Mask m(grid.points_x(), grid.points_y());
  for (const auto& c : cells) {
    const int rx = grid.n_x - static_cast<int>(c.x_prefix.size());
    const int ry = grid.n_y - static_cast<int>(c.y_prefix.size());
    const u64 x0 = bits_value(c.x_prefix) << rx, y0 = bits_value(c.y_prefix) << ry;
    for (u64 y = y0; y < y0 + (u64{1} << ry); ++y) {
      for (u64 x = x0; x < x0 + (u64{1} << rx); ++x) m.at(x, y) = 1;
    }
  }
  return m;
}

ObstacleSpec decompose_mask(const Mask& mask, const GridSpec& grid) {
  grid.validate();
  if (mask.nx_points != grid.points_x() || mask.ny_points != grid.points_y() ||
      mask.bits.size() != mask.nx_points * mask.ny_points) {
    throw DimensionMismatch("mask must be " + std::to_string(grid.points_x()) + " x " +
                            std::to_string(grid.points_y()) + " points");
  }
  ObstacleSpec spec;
  quadtree(mask, MaskSums(mask), grid, "", "", spec.cells);
  return spec;
}

CommonPrefix common_prefix_lengths(const std::string& prefix, int n) {
  check_bits(prefix, n, "cell");
  const int k = static_cast<int>(prefix.size());
  const u64 b = bits_value(prefix);
  CommonPrefix cp;
  if (b != 0) cp.minus = shared_leading_bits(b, b - 1, k);
  if (b != (u64{1} << k) - 1) cp.plus = shared_leading_bits(b, b + 1, k);
  return cp;
}

std::vector<ControlBit> CorrectionTerm::controls() const {
  std::vector<ControlBit> c = prefix_controls;
  c.insert(c.end(), cross_controls.begin(), cross_controls.end());
  return c;
}

std::vector<CorrectionTerm> correction_terms(const BinaryCell& cell, Axis axis,
                                             const GridSpec& grid) {
  grid.validate();
  cell.validate(grid);
  const int n = grid.bits(axis);
  const std::string& prefix = cell.prefix(axis);
  const std::string& cross = cell.prefix(other(axis));
  const CommonPrefix cp = common_prefix_lengths(prefix, n);
  std::vector<CorrectionTerm> out;
  for (const auto& side : {cp.minus, cp.plus}) {
    if (!side) continue;
    CorrectionTerm t;
    t.axis = axis;
    t.nhat = n - *side;
    t.prefix_bits = prefix.substr(0, static_cast<std::size_t>(*side));
    t.cross_bits = cross;
    t.prefix_controls = controls_for(t.prefix_bits, axis, grid);
    t.cross_controls = controls_for(cross, other(axis), grid);
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<CorrectionTerm> obstacle_terms(const ObstacleSpec& obstacle, Axis axis,
                                           const GridSpec& grid) {
  obstacle.validate(grid);
  std::vector<CorrectionTerm> all;
  for (const auto& cell : obstacle.cells) {
    for (auto& t : correction_terms(cell, axis, grid)) all.push_back(std::move(t));
  }
  // A pair shared by two cells appears once per side. Cross ranges are dyadic,
  // so they are nested or disjoint; keep only the outermost copy.
  std::vector<CorrectionTerm> kept;
  for (std::size_t i = 0; i < all.size(); ++i) {
    bool covered = false;
    for (std::size_t k = 0; k < all.size() && !covered; ++k) {
      if (k == i || all[k].nhat != all[i].nhat || all[k].prefix_bits != all[i].prefix_bits) {
        continue;
      }
      const auto& ck = all[k].cross_bits;
      const auto& ci = all[i].cross_bits;
      if (ck.size() > ci.size() || ci.compare(0, ck.size(), ck) != 0) continue;
      covered = ck.size() < ci.size() || k < i;
    }
    if (!covered) kept.push_back(all[i]);
  }
  std::stable_sort(kept.begin(), kept.end(),
                   [](const CorrectionTerm& a, const CorrectionTerm& b) { return a.nhat < b.nhat; });
  return kept;
}

SparseOperator correction_generator(const CorrectionTerm& term, const GridSpec& grid,
                                    int ancillas) {
  const int n_cross = grid.bits(other(term.axis));
  const SparseOperator axis_op =
      kron(projector(term.prefix_bits), diff_term(term.nhat, term.nhat, grid.l));
  const SparseOperator cross_op =
      kron(projector(term.cross_bits),
           SparseOperator::identity(std::int64_t{1}
                                    << (n_cross - static_cast<int>(term.cross_bits.size()))));
  const SparseOperator anc = SparseOperator::identity(std::int64_t{1} << ancillas);
  if (term.axis == Axis::X) return kron(anc, kron(axis_op, cross_op));
  return kron(anc, kron(cross_op, axis_op));
}

SparseOperator masked_diff(Axis axis, const ObstacleSpec& obstacle, const GridSpec& grid,
                           int ancillas) {
  SparseOperator d = lift(diff(grid.bits(axis), grid.l, DiffScheme::Central,
                               BoundaryCondition::Dirichlet),
                          axis, grid, ancillas);
  for (const auto& t : obstacle_terms(obstacle, axis, grid)) {
    d = d - correction_generator(t, grid, ancillas);
  }
  return d;
}

SparseOperator masked_group_generator(int j, Axis axis, const ObstacleSpec& obstacle,
                                      const GridSpec& grid, int ancillas) {
  SparseOperator g = lift(diff_term(grid.bits(axis), j, grid.l), axis, grid, ancillas);
  for (const auto& t : obstacle_terms(obstacle, axis, grid)) {
    if (t.nhat == j) g = g - correction_generator(t, grid, ancillas);
  }
  return g;
}

std::vector<int> ControlFrame::enter(const std::vector<ControlBit>& controls) {
  std::vector<int> qubits;
  for (const auto& cb : controls) {
    auto it = std::find(flipped_.begin(), flipped_.end(), cb.qubit);
    const bool is_flipped = it != flipped_.end();
    const bool want_flipped = cb.bit == 0;
    if (is_flipped != want_flipped) {
      c_.add(x_gate(cb.qubit));
      if (is_flipped) {
        flipped_.erase(it);
      } else {
        flipped_.push_back(cb.qubit);
      }
    }
    qubits.push_back(cb.qubit);
  }
  return qubits;
}

void ControlFrame::reset() {
  for (int q : flipped_) c_.add(x_gate(q));
  flipped_.clear();
}

namespace {

void append_masked_group(Circuit& c, int j, double gamma, Axis axis,
                         const std::vector<CorrectionTerm>& terms, const GridSpec& grid,
                         const RegisterLayout& layout) {
  const std::vector<int> slice = layout.axis_qubits(axis);
  const std::vector<int> lower(slice.begin(), slice.begin() + (j - 1));
  append_u_bell_dagger(c, j, -kHalfPi, slice);
  c.add(mcrz(gamma / grid.l, lower, slice[j - 1]));
  ControlFrame frame(c);
  for (const auto& t : terms) {
    if (t.nhat != j) continue;
    std::vector<int> ctrl = lower;
    const auto extra = frame.enter(t.controls());
    ctrl.insert(ctrl.end(), extra.begin(), extra.end());
    c.add(mcrz(-gamma / grid.l, ctrl, slice[j - 1]));
  }
  frame.reset();
  append_u_bell(c, j, -kHalfPi, slice);
}

void check_layout(const RegisterLayout& layout, const GridSpec& grid) {
  if (layout.n_x != grid.n_x || layout.n_y != grid.n_y) {
    throw DimensionMismatch("register layout does not match the grid");
  }
}

}  // namespace

Circuit masked_diff_circuit(double gamma, Axis axis, const ObstacleSpec& obstacle,
                            const GridSpec& grid, const RegisterLayout& layout) {
  check_layout(layout, grid);
  const auto terms = obstacle_terms(obstacle, axis, grid);
  Circuit c(layout.num_qubits());
  for (int j = 1; j <= grid.bits(axis); ++j) append_masked_group(c, j, gamma, axis, terms, grid, layout);
  return c;
}

Circuit masked_diff_group_circuit(int j, double gamma, Axis axis, const ObstacleSpec& obstacle,
                                  const GridSpec& grid, const RegisterLayout& layout) {
  check_layout(layout, grid);
  if (j < 1 || j > grid.bits(axis)) throw BoundsError("group index out of range");
  Circuit c(layout.num_qubits());
  append_masked_group(c, j, gamma, axis, obstacle_terms(obstacle, axis, grid), grid, layout);
  return c;
}

double max_amplitude_inside(const StateVector& state, const ObstacleSpec& obstacle,
                            const GridSpec& grid, const RegisterLayout& layout) {
  check_layout(layout, grid);
  if (state.num_qubits() != layout.num_qubits()) {
    throw DimensionMismatch("state does not match the register layout");
  }
  const Mask m = obstacle.rasterize(grid);
  const u64 sectors = u64{1} << layout.ancillas;
  double worst = 0.0;
  for (u64 y = 0; y < m.ny_points; ++y) {
    for (u64 x = 0; x < m.nx_points; ++x) {
      if (!m.at(x, y)) continue;
      for (u64 s = 0; s < sectors; ++s) {
        const u64 idx = ((s << grid.n_x | x) << grid.n_y) | y;
        worst = std::max(worst, std::abs(state[idx]));
      }
    }
  }
  return worst;
}

}  // namespace leeq
