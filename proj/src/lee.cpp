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

#include "leeq/lee.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "leeq/classical.hpp"
#include "leeq/errors.hpp"

namespace leeq {

namespace {

using u64 = std::uint64_t;

constexpr double kHalfPi = std::numbers::pi / 2.0;

// 4x4 ancilla operators, a1 the more significant bit.
SparseOperator anc(int r, int c) {
  return kron(sigma(r >> 1, c >> 1), sigma(r & 1, c & 1));
}

bool has_obstacle(const ObstacleSpec* o) { return o != nullptr && !o->empty(); }

std::vector<int> head(const std::vector<int>& v, int k) {
  return std::vector<int>(v.begin(), v.begin() + k);
}

std::vector<int> cat(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Builds the gate sequence of one step on the LEE register.
class StepBuilder {
 public:
  StepBuilder(const LeeParams& p, const GridSpec& g, double tau, const ObstacleSpec* obstacle)
      : p_(p), g_(g), lay_(RegisterLayout::lee(g)), tau_(tau), c_(lay_.num_qubits()) {
    if (has_obstacle(obstacle)) {
      terms_x_ = obstacle_terms(*obstacle, Axis::X, g);
      terms_y_ = obstacle_terms(*obstacle, Axis::Y, g);
    }
  }

  Circuit take() { return std::move(c_); }

  double flow_angle() const { return -p_.u_bar * tau_ / g_.l; }
  double coupling_angle() const { return -tau_ / (p_.rho_bar * g_.l); }

  // Central W_{x,j}. sign = -1 gives the periodic corner factor at j = n.
  void central_x(int j, double sign) {
    const auto xs = lay_.axis_qubits(Axis::X);
    const auto lower = head(xs, j - 1);
    const int t = xs[j - 1];
    const int a1 = lay_.a1(), a2 = lay_.a2();
    ControlFrame frame(c_);
    append_u_bell_dagger(c_, j, -kHalfPi, xs);
    c_.add(x_gate(a1));
    c_.add(h_gate(a2));
    c_.add(mcrzz(sign * coupling_angle(), cat({a1}, lower), a2, t));
    for (const auto& term : terms_x_) {
      if (term.nhat != j) continue;
      const auto extra = frame.enter(term.controls());
      c_.add(mcrzz(-coupling_angle(), cat(cat({a1}, lower), extra), a2, t));
    }
    c_.add(x_gate(a1));
    c_.add(h_gate(a2));
    c_.add(mcrz(sign * flow_angle(), lower, t));
    for (const auto& term : terms_x_) {
      if (term.nhat != j) continue;
      const auto extra = frame.enter(term.controls());
      c_.add(mcrz(-flow_angle(), cat(lower, extra), t));
    }
    frame.reset();
    append_u_bell(c_, j, -kHalfPi, xs);
  }

  void central_y(int j, double sign) {
    const auto ys = lay_.axis_qubits(Axis::Y);
    const auto lower = head(ys, j - 1);
    const int t = ys[j - 1];
    const int a1 = lay_.a1(), a2 = lay_.a2();
    ControlFrame frame(c_);
    append_u_bell_dagger(c_, j, -kHalfPi, ys);
    c_.add(h_gate(a1));
    c_.add(x_gate(a2));
    c_.add(mcrzz(sign * coupling_angle(), cat({a2}, lower), a1, t));
    for (const auto& term : terms_y_) {
      if (term.nhat != j) continue;
      const auto extra = frame.enter(term.controls());
      c_.add(mcrzz(-coupling_angle(), cat(cat({a2}, lower), extra), a1, t));
    }
    c_.add(h_gate(a1));
    c_.add(x_gate(a2));
    frame.reset();
    append_u_bell(c_, j, -kHalfPi, ys);
  }

  // The |0..0>, |1..1> corner pair mapped onto the j = n pair.
  template <typename F>
  void corner(Axis axis, F&& group) {
    const auto qs = lay_.axis_qubits(axis);
    for (std::size_t m = 0; m + 1 < qs.size(); ++m) c_.add(x_gate(qs[m]));
    group();
    for (std::size_t m = 0; m + 1 < qs.size(); ++m) c_.add(x_gate(qs[m]));
  }

  // Off-diagonal D+/D- blocks of one axis. `ctrl` selects the p sector (it
  // must be |0>), `tgt` is the ancilla that tells p from the velocity.
  void updown_off(Axis axis, int j, int ctrl, int tgt) {
    const auto qs = lay_.axis_qubits(axis);
    std::vector<int> slice = head(qs, j);
    slice.push_back(tgt);
    c_.add(x_gate(ctrl));
    c_.add(x_gate(qs[j - 1]));
    append_u_bell_dagger(c_, j + 1, -kHalfPi, slice);
    c_.add(mcrz(2 * coupling_angle(), cat({ctrl}, head(qs, j)), tgt));
    append_u_bell(c_, j + 1, -kHalfPi, slice);
    c_.add(x_gate(qs[j - 1]));
    c_.add(x_gate(ctrl));
  }

  // Identity part of the D+/D- blocks: a rotation between p and the velocity.
  void updown_identity(int ctrl, int tgt) {
    c_.add(x_gate(ctrl));
    c_.add(cry_gate(2 * coupling_angle(), ctrl, tgt));
    c_.add(x_gate(ctrl));
  }

  void updown_diag(int j) {
    const auto xs = lay_.axis_qubits(Axis::X);
    append_u_bell_dagger(c_, j, -kHalfPi, xs);
    c_.add(mcrz(flow_angle(), head(xs, j - 1), xs[j - 1]));
    append_u_bell(c_, j, -kHalfPi, xs);
  }

  const RegisterLayout& layout() const { return lay_; }

 private:
  LeeParams p_;
  GridSpec g_;
  RegisterLayout lay_;
  double tau_;
  Circuit c_;
  std::vector<CorrectionTerm> terms_x_, terms_y_;
};

}  // namespace

void LeeParams::validate() const {
  if (!std::isfinite(u_bar) || !std::isfinite(rho_bar) || !std::isfinite(c)) {
    throw BoundsError("LEE parameters must be finite");
  }
  if (!(rho_bar > 0.0) || !(c > 0.0)) throw BoundsError("rho_bar and c must be positive");
}

bool LeeParams::conservative() const { return std::abs(c - 1.0 / rho_bar) < 1e-12; }

void TrotterSchedule::validate() const {
  if (!(tau > 0.0) || !std::isfinite(tau)) throw BoundsError("tau must be positive");
  if (steps < 0) throw BoundsError("steps must be non-negative");
}

std::string_view to_string(StepScheme s) { return s == StepScheme::Central ? "central" : "updown"; }

StepScheme parse_step_scheme(std::string_view s) {
  if (s == "central") return StepScheme::Central;
  if (s == "updown") return StepScheme::UpDown;
  throw ParseError("unknown scheme '" + std::string(s) + "'");
}

SparseOperator lee_generator(const LeeParams& params, const GridSpec& grid, BoundaryCondition bc,
                             const ObstacleSpec* obstacle, StepScheme scheme) {
  params.validate();
  grid.validate();
  const bool obst = has_obstacle(obstacle);
  if (obst && bc != BoundaryCondition::Dirichlet) {
    throw Unsupported("obstacles are supported with Dirichlet boundaries only");
  }
  if (scheme == StepScheme::UpDown && bc != BoundaryCondition::Dirichlet) {
    throw Unsupported("the updown scheme is defined for Dirichlet boundaries only");
  }
  if (scheme == StepScheme::UpDown && obst) {
    throw Unsupported("the updown scheme does not support obstacles");
  }
  auto central = [&](Axis a) {
    if (obst) return masked_diff(a, *obstacle, grid, 0);
    return lift(diff(grid.bits(a), grid.l, DiffScheme::Central, bc), a, grid, 0);
  };
  auto lifted = [&](Axis a, DiffScheme s) {
    return lift(diff(grid.bits(a), grid.l, s, bc), a, grid, 0);
  };
  const SparseOperator dx = central(Axis::X);
  const SparseOperator dy = central(Axis::Y);
  SparseOperator sup_x = dx, sup_y = dy, sub_x = dx, sub_y = dy;
  if (scheme == StepScheme::UpDown) {
    sup_x = lifted(Axis::X, DiffScheme::Forward);
    sup_y = lifted(Axis::Y, DiffScheme::Forward);
    sub_x = lifted(Axis::X, DiffScheme::Backward);
    sub_y = lifted(Axis::Y, DiffScheme::Backward);
  }
  const double rc2 = params.rho_bar * params.c * params.c;
  const double inv_rho = 1.0 / params.rho_bar;
  const SparseOperator i4 = SparseOperator::identity(4);
  SparseOperator a = kron(i4, dx) * cplx{-params.u_bar, 0.0};
  a = a - (kron(anc(0, 1), sup_x) + kron(anc(0, 2), sup_y)) * cplx{rc2, 0.0};
  a = a - (kron(anc(1, 0), sub_x) + kron(anc(2, 0), sub_y)) * cplx{inv_rho, 0.0};
  return a;
}

SparseOperator lee_hamiltonian(const LeeParams& params, const GridSpec& grid,
                               BoundaryCondition bc, const ObstacleSpec* obstacle,
                               StepScheme scheme) {
  return lee_generator(params, grid, bc, obstacle, scheme) * cplx{0.0, 1.0};
}

Circuit trotter_step(const LeeParams& params, const GridSpec& grid, double tau,
                     BoundaryCondition bc, const ObstacleSpec* obstacle, StepScheme scheme) {
  params.validate();
  grid.validate();
  if (!params.conservative()) {
    throw Unsupported("trotter_step needs c = 1/rho_bar; use split_generator/split_step for "
                      "non-conservative parameters");
  }
  if (!std::isfinite(tau) || tau < 0.0) throw BoundsError("tau must be finite and non-negative");
  const bool obst = has_obstacle(obstacle);
  if (obst && bc != BoundaryCondition::Dirichlet) {
    throw Unsupported("obstacles are supported with Dirichlet boundaries only");
  }
  if (scheme == StepScheme::UpDown && (bc != BoundaryCondition::Dirichlet || obst)) {
    throw Unsupported("the updown scheme supports Dirichlet boundaries without obstacles only");
  }
  StepBuilder b(params, grid, tau, obstacle);
  const RegisterLayout& lay = b.layout();
  if (scheme == StepScheme::Central) {
    const bool periodic = bc == BoundaryCondition::Periodic;
    if (periodic) b.corner(Axis::X, [&] { b.central_x(grid.n_x, -1.0); });
    for (int j = 1; j <= grid.n_x; ++j) b.central_x(j, 1.0);
    if (periodic) b.corner(Axis::Y, [&] { b.central_y(grid.n_y, -1.0); });
    for (int j = 1; j <= grid.n_y; ++j) b.central_y(j, 1.0);
  } else {
    for (int j = 1; j <= grid.n_x; ++j) {
      b.updown_diag(j);
      b.updown_off(Axis::X, j, lay.a1(), lay.a2());
    }
    b.updown_identity(lay.a1(), lay.a2());
    for (int j = 1; j <= grid.n_y; ++j) b.updown_off(Axis::Y, j, lay.a2(), lay.a1());
    b.updown_identity(lay.a2(), lay.a1());
  }
  return b.take();
}

double trotter_error_bound(const LeeParams& params, const GridSpec& grid, double tau) {
  params.validate();
  grid.validate();
  if (!params.conservative()) {
    throw Unsupported("the error bound holds for conservative parameters only");
  }
  const double n = std::max(grid.n_x, grid.n_y);
  const double u = params.u_bar;
  const double r = 1.0 / (2.0 * params.rho_bar);
  const double l2 = grid.l * grid.l;
  return ((u / 2) * (u / 2) + 2 * r * r + u * r) * tau * tau * (n - 1) / (2 * l2) +
         r * r * tau * tau * n * n / (2 * l2);
}

GeneratorGroups lee_generator_groups(const LeeParams& params, const GridSpec& grid) {
  params.validate();
  grid.validate();
  const double inv_rho = 1.0 / params.rho_bar;
  const double rc2 = params.rho_bar * params.c * params.c;
  GeneratorGroups g;
  for (int j = 1; j <= grid.n_x; ++j) {
    const SparseOperator t = lift(diff_term(grid.n_x, j, grid.l), Axis::X, grid, 0);
    g.diag_x.push_back(kron(SparseOperator::identity(4), t) * cplx{-params.u_bar, 0.0});
    g.off_x.push_back(kron(anc(0, 1), t) * cplx{-rc2, 0.0} + kron(anc(1, 0), t) * cplx{-inv_rho, 0.0});
  }
  for (int j = 1; j <= grid.n_y; ++j) {
    const SparseOperator t = lift(diff_term(grid.n_y, j, grid.l), Axis::Y, grid, 0);
    g.off_y.push_back(kron(anc(0, 2), t) * cplx{-rc2, 0.0} + kron(anc(2, 0), t) * cplx{-inv_rho, 0.0});
  }
  return g;
}

SplitGenerator split_generator(const SparseOperator& a) {
  const SparseOperator ad = a.adjoint();
  return {(a + ad) * cplx{0.5, 0.0}, (a - ad) * cplx{0.0, -0.5}};
}

SplitStep split_step(const SplitGenerator& split, const LeeParams& params, const GridSpec& grid,
                     double tau, BoundaryCondition bc, const ObstacleSpec* obstacle) {
  params.validate();
  const double kappa = params.kappa();
  const LeeParams unitary_params{params.u_bar, 1.0 / kappa, kappa};
  const SparseOperator expected =
      lee_generator(unitary_params, grid, bc, obstacle, StepScheme::Central);
  const SparseOperator ia2 = split.a2 * cplx{0.0, 1.0};
  if (ia2.dim() != expected.dim() || ia2.max_abs_diff(expected) > 1e-12 * (1.0 + kappa)) {
    throw Unsupported("A2 does not match the LEE block pattern; circuit synthesis is "
                      "LEE-specific");
  }
  SplitStep out;
  out.circuit = trotter_step(unitary_params, grid, tau, bc, obstacle, StepScheme::Central);
  if (split.a1.is_zero()) {
    out.nonunitary = SparseOperator::identity(split.a1.dim());
  } else {
    out.nonunitary = SparseOperator::from_dense(expm_dense(split.a1.to_dense(), tau));
  }
  return out;
}

PreparedState prepare_point_source(const GridSpec& grid, const std::vector<PointSource>& sources) {
  grid.validate();
  if (sources.empty()) throw BoundsError("at least one point source is required");
  const RegisterLayout lay = RegisterLayout::lee(grid);
  std::vector<cplx> amps(lay.dim(), cplx{0.0, 0.0});
  for (const auto& s : sources) {
    if (s.width == 0 || (s.width & (s.width - 1)) != 0) {
      throw BoundsError("source width must be a power of two");
    }
    if (s.x + s.width > grid.points_x() || s.y + s.width > grid.points_y()) {
      throw BoundsError("source at (" + std::to_string(s.x) + "," + std::to_string(s.y) +
                        ") with width " + std::to_string(s.width) + " leaves the domain");
    }
    if (!std::isfinite(s.pressure)) throw BoundsError("source pressure must be finite");
    for (u64 x = s.x; x < s.x + s.width; ++x) {
      for (u64 y = s.y; y < s.y + s.width; ++y) amps[lay.index_of(Component::P, x, y)] += s.pressure;
    }
  }
  StateVector st(lay.num_qubits(), std::move(amps));
  PreparedState out;
  out.norm_factor = st.norm();
  if (!(out.norm_factor > 0.0)) throw BoundsError("point sources sum to a zero field");
  st.normalize();
  out.state = std::move(st);

  if (sources.size() == 1) {
    const auto& s = sources[0];
    int k = 0;
    while ((u64{1} << k) < s.width) ++k;
    if (s.pressure > 0.0 && s.x % s.width == 0 && s.y % s.width == 0) {
      Circuit c(lay.num_qubits());
      auto axis = [&](Axis a, u64 origin) {
        for (int i = 1; i <= lay.bits(a); ++i) {
          if (i <= k) {
            c.add(h_gate(lay.q(a, i)));
          } else if ((origin >> (i - 1)) & 1) {
            c.add(x_gate(lay.q(a, i)));
          }
        }
      };
      axis(Axis::X, s.x);
      axis(Axis::Y, s.y);
      out.circuit = std::move(c);
    }
  }
  return out;
}

std::vector<Snapshot> evolve(StateVector state, const Circuit& step_circuit,
                             const TrotterSchedule& schedule, int snapshot_every,
                             double norm_factor, const RegisterLayout& layout) {
  schedule.validate();
  if (step_circuit.num_qubits() != state.num_qubits() ||
      state.num_qubits() != layout.num_qubits()) {
    throw DimensionMismatch("step circuit, state and layout must have the same qubit count");
  }
  if (snapshot_every < 1) throw BoundsError("snapshot_every must be at least 1");
  std::vector<Snapshot> out;
  auto snap = [&](int step) {
    out.push_back({step, step * schedule.tau, state.norm(),
                   extract_field(state, layout, norm_factor)});
  };
  snap(0);
  for (int s = 1; s <= schedule.steps; ++s) {
    apply_circuit(state, step_circuit);
    if (s % snapshot_every == 0 || s == schedule.steps) snap(s);
  }
  return out;
}

}  // namespace leeq
