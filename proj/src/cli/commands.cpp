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

#include "leeq/cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <Eigen/Dense>

#include "CLI11.hpp"
#include "leeq/cli/io.hpp"
#include "leeq/errors.hpp"
#include "leeq/lee.hpp"

namespace leeq::cli {

namespace {

using json = nlohmann::json;
namespace fs = std::filesystem;

CVec to_vec(const StateVector& s) {
  CVec v(static_cast<Eigen::Index>(s.dim()));
  for (std::uint64_t i = 0; i < s.dim(); ++i) v(static_cast<Eigen::Index>(i)) = s[i];
  return v;
}

double envelope(int n) { return 42.0 * n * n - 34.0 * n + 34.0; }

json count_json(const GateCount& gc) {
  json j = json::object();
  for (std::size_t k = 0; k < kNumGateKinds; ++k) {
    const auto kind = static_cast<GateKind>(k);
    j[std::string(gate_kind_name(kind))] = gc[kind];
  }
  j["total"] = gc.total();
  j["cnot_after_decomposition"] = gc.cnot_after_decomposition;
  return j;
}

json opt_int(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

void require_conservative(const LeeParams& p) {
  if (!p.conservative()) {
    throw Unsupported("the quantum step needs c = 1/rho_bar; non-conservative parameters go "
                      "through split_generator/split_step");
  }
}

void check_sources(const ExperimentConfig& cfg) {
  if (cfg.sources.empty()) throw ParseError("config needs at least one 'source' line");
}

/// Largest |p| over obstacle points in physical units.
double max_inside_p(const FieldGrid& f, const Mask& m) {
  double mx = 0.0;
  for (std::uint64_t y = 0; y < f.ny_points; ++y) {
    for (std::uint64_t x = 0; x < f.nx_points; ++x) {
      if (m.at(x, y)) mx = std::max(mx, std::abs(f.p[f.at(x, y)]));
    }
  }
  return mx;
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void write_timing(const fs::path& dir, const std::string& command, double seconds) {
  write_json(dir / "timing.json", json{{"command", command}, {"wall_seconds", seconds}});
}

// ---------------------------------------------------------------------------
// simulate

int cmd_simulate(const ExperimentConfig& cfg, const Overrides& ov, std::ostream& out) {
  require_conservative(cfg.params);
  check_sources(cfg);
  const Stopwatch clock;
  const ObstacleSpec obstacle = load_obstacle(cfg);
  const ObstacleSpec* obs = obstacle.empty() ? nullptr : &obstacle;
  const RegisterLayout lay = RegisterLayout::lee(cfg.grid);
  const PreparedState prep = prepare_point_source(cfg.grid, cfg.sources);
  const Circuit step = trotter_step(cfg.params, cfg.grid, cfg.schedule.tau, cfg.bc, obs, cfg.scheme);
  if (!ov.dump_circuit.empty()) write_text(ov.dump_circuit, circuit_to_text(step));

  const auto snaps =
      evolve(prep.state, step, cfg.schedule, cfg.snapshot_every, prep.norm_factor, lay);

  json oracle = {{"enabled", false}};
  std::vector<std::array<double, 3>> l2;
  if (cfg.oracle) {
    if (lay.num_qubits() > kOracleMaxQubits) {
      oracle["reason"] = "disabled above " + std::to_string(kOracleMaxQubits) + " qubits";
    } else {
      oracle["enabled"] = true;
      oracle["method"] = lay.dim() <= static_cast<std::uint64_t>(kDenseExpmDim) ? "dense" : "krylov";
      const SparseOperator a = lee_generator(cfg.params, cfg.grid, cfg.bc, obs, cfg.scheme);
      CVec f = prep.norm_factor * to_vec(prep.state);
      double t = 0.0;
      for (const auto& s : snaps) {
        if (s.time > t) f = expm_apply(a, f, s.time - t);
        t = s.time;
        const FieldGrid ref = field_from_vector(f, lay);
        l2.push_back({l2_distance(s.field, ref, Component::P), l2_distance(s.field, ref, Component::U),
                      l2_distance(s.field, ref, Component::V)});
      }
    }
  }

  const fs::path dir = fs::path(cfg.output_dir);
  fs::create_directories(dir);
  const Mask mask = obs ? obstacle.rasterize(cfg.grid) : Mask();
  json rows = json::array();
  double drift = 0.0;
  for (std::size_t i = 0; i < snaps.size(); ++i) {
    const auto& s = snaps[i];
    for (Component c : {Component::P, Component::U, Component::V}) {
      std::ofstream f(dir / snapshot_filename(s.step, c), std::ios::binary);
      write_snapshot_csv(f, s.field, c, s.time);
    }
    drift = std::max(drift, std::abs(s.norm - 1.0));
    json r = {{"step", s.step},
              {"time", s.time},
              {"norm", s.norm},
              {"imag_residual", s.field.imag_residual},
              {"zero_sector_norm", s.field.zero_sector_norm}};
    if (obs) r["max_inside_p"] = max_inside_p(s.field, mask);
    if (!l2.empty()) {
      r["l2_p"] = l2[i][0];
      r["l2_u"] = l2[i][1];
      r["l2_v"] = l2[i][2];
    }
    rows.push_back(r);
  }

  json report = {{"schema_version", kReportSchemaVersion},
                 {"command", "simulate"},
                 {"config", serialize_config(cfg)},
                 {"num_qubits", lay.num_qubits()},
                 {"obstacle_cells", obstacle.cells.size()},
                 {"gate_count", count_json(count(step))},
                 {"bound", trotter_error_bound(cfg.params, cfg.grid, cfg.schedule.tau)},
                 {"norm_drift", drift},
                 {"oracle", oracle},
                 {"snapshots", rows}};
  write_json(dir / "report.json", report);
  write_timing(dir, "simulate", clock.seconds());

  out << "simulated " << cfg.schedule.steps << " steps on " << lay.num_qubits() << " qubits, "
      << snaps.size() << " snapshots in " << dir.string() << "\n";
  out << "norm drift " << format_double(drift) << "\n";
  if (obs) out << "max |p| inside obstacle " << format_double(rows.back()["max_inside_p"].get<double>()) << "\n";
  if (!l2.empty()) out << "final L2(p) vs exponential " << format_double(l2.back()[0]) << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// compare

int cmd_compare(const ExperimentConfig& cfg, std::ostream& out) {
  const Stopwatch clock;
  const CompareResult r = run_compare(cfg);
  const fs::path dir = fs::path(cfg.output_dir);
  std::ostringstream csv;
  csv << "# pressure L2 error against the exponential reference\n";
  csv << "time,l2_quantum,l2_fdm,quantum_norm,fdm_growth\n";
  bool below = true;
  json rows = json::array();
  for (const auto& row : r.rows) {
    csv << format_double(row.time) << ',' << format_double(row.l2_quantum) << ','
        << format_double(row.l2_fdm) << ',' << format_double(row.quantum_norm) << ','
        << format_double(row.fdm_growth) << "\n";
    if (row.step > 0 && !(row.l2_quantum < row.l2_fdm)) below = false;
    rows.push_back({{"step", row.step},
                    {"time", row.time},
                    {"l2_quantum", row.l2_quantum},
                    {"l2_fdm", row.l2_fdm}});
  }
  write_text(dir / "compare.csv", csv.str());
  json report = {{"schema_version", kReportSchemaVersion},
                 {"command", "compare"},
                 {"config", serialize_config(cfg)},
                 {"fdm_tau", cfg.fdm_tau},
                 {"fdm_diverged", r.fdm_diverged},
                 {"coarse_fdm",
                  {{"tau", cfg.schedule.tau},
                   {"horizon", r.coarse_horizon},
                   {"diverged", r.coarse_diverged},
                   {"diverged_at", r.coarse_diverged ? json(r.coarse_diverged_at) : json(nullptr)},
                   {"max_growth", r.coarse_max_growth}}},
                 {"quantum_below_fdm", below},
                 {"rows", rows}};
  write_json(dir / "report.json", report);
  write_timing(dir, "compare", clock.seconds());

  out << "time        L2 quantum              L2 fdm\n";
  for (const auto& row : r.rows) {
    out << format_double(row.time) << "  " << format_double(row.l2_quantum) << "  "
        << format_double(row.l2_fdm) << "\n";
  }
  out << "forward Euler at tau=" << format_double(cfg.schedule.tau)
      << (r.coarse_diverged ? " diverges" : " stays bounded") << " (max growth "
      << format_double(r.coarse_max_growth) << ")\n";
  if (r.fdm_diverged) {
    out << "forward Euler at fdm_tau=" << format_double(cfg.fdm_tau) << " diverged\n";
    return kExitDiverged;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// gate-count

int cmd_gate_count(const ExperimentConfig& cfg, int n_min, int n_max, const std::string& out_path,
                   std::ostream& out) {
  const GateCountResult r = run_gate_count(cfg, n_min, n_max);
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"n", row.n},
                    {"tally", count_json(row.count)},
                    {"envelope", row.envelope},
                    {"ratio_to_envelope",
                     static_cast<double>(row.count.cnot_after_decomposition) / row.envelope}});
  }
  json report = {{"schema_version", kReportSchemaVersion},
                 {"command", "gate-count"},
                 {"scheme", to_string(cfg.scheme)},
                 {"bc", to_string(cfg.bc)},
                 {"rows", rows},
                 {"fit", {{"a", r.a}, {"b", r.b}, {"c", r.c}, {"relative_residual", r.relative_residual}}}};
  if (!out_path.empty()) write_json(out_path, report);
  out << report.dump(2) << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// bound

int cmd_bound(const ExperimentConfig& cfg, bool measure, std::ostream& out) {
  require_conservative(cfg.params);
  const double tau = cfg.schedule.tau;
  const double bound = trotter_error_bound(cfg.params, cfg.grid, tau);
  json report = {{"schema_version", kReportSchemaVersion},
                 {"command", "bound"},
                 {"tau", tau},
                 {"n", std::max(cfg.grid.n_x, cfg.grid.n_y)},
                 {"bound", bound}};
  out << "bound " << format_double(bound) << "\n";
  if (measure) {
    const RegisterLayout lay = RegisterLayout::lee(cfg.grid);
    if (lay.num_qubits() > kDenseMaxQubits) {
      throw NumericalGuard("--measure needs at most " + std::to_string(kDenseMaxQubits) +
                           " qubits, the grid has " + std::to_string(lay.num_qubits()));
    }
    const ObstacleSpec obstacle = load_obstacle(cfg);
    const ObstacleSpec* obs = obstacle.empty() ? nullptr : &obstacle;
    const Circuit v = trotter_step(cfg.params, cfg.grid, tau, cfg.bc, obs, cfg.scheme);
    const auto a = lee_generator(cfg.params, cfg.grid, cfg.bc, obs, cfg.scheme);
    const double measured = operator_norm(dense_unitary(v) - expm_dense(a.to_dense(), tau));
    report["measured"] = measured;
    report["margin"] = bound - measured;
    out << "measured " << format_double(measured) << "\n";
    out << "margin " << format_double(bound - measured) << "\n";
  }
  write_json(fs::path(cfg.output_dir) / "bound.json", report);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// obstacle-check

int cmd_obstacle_check(ExperimentConfig cfg, const std::string& mask_path,
                       const std::string& cells_path, bool have_config, int steps,
                       std::ostream& out) {
  ObstacleSpec obstacle;
  if (!mask_path.empty()) {
    const Mask m = read_mask(mask_path);
    const GridSpec g = grid_for_mask(m, cfg.grid.l);
    if (have_config && (g.n_x != cfg.grid.n_x || g.n_y != cfg.grid.n_y)) {
      throw DimensionMismatch("mask does not match the configured grid");
    }
    cfg.grid = g;
    obstacle = decompose_mask(m, g);
  } else if (!cells_path.empty()) {
    obstacle = read_cells(cells_path);
  } else {
    obstacle = load_obstacle(cfg);
  }
  obstacle.validate(cfg.grid);

  json cells = json::array();
  for (const auto& c : obstacle.cells) {
    const auto px = common_prefix_lengths(c.x_prefix, cfg.grid.n_x);
    const auto py = common_prefix_lengths(c.y_prefix, cfg.grid.n_y);
    cells.push_back({{"x_prefix", c.x_prefix},
                     {"y_prefix", c.y_prefix},
                     {"p_x_minus", opt_int(px.minus)},
                     {"p_x_plus", opt_int(px.plus)},
                     {"p_y_minus", opt_int(py.minus)},
                     {"p_y_plus", opt_int(py.plus)}});
    out << "cell " << c.x_prefix << "," << c.y_prefix << "  p_x-=" << opt_int(px.minus).dump()
        << " p_x+=" << opt_int(px.plus).dump() << " p_y-=" << opt_int(py.minus).dump()
        << " p_y+=" << opt_int(py.plus).dump() << "\n";
  }
  const std::size_t tx = obstacle.empty() ? 0 : obstacle_terms(obstacle, Axis::X, cfg.grid).size();
  const std::size_t ty = obstacle.empty() ? 0 : obstacle_terms(obstacle, Axis::Y, cfg.grid).size();
  out << obstacle.cells.size() << " cells, " << tx << " x corrections, " << ty
      << " y corrections\n";

  const ImpermeabilityResult imp = run_impermeability(cfg, obstacle, steps);
  json report = {{"schema_version", kReportSchemaVersion},
                 {"command", "obstacle-check"},
                 {"n_x", cfg.grid.n_x},
                 {"n_y", cfg.grid.n_y},
                 {"cells", cells},
                 {"corrections", {{"x", tx}, {"y", ty}}},
                 {"impermeability",
                  {{"skipped", imp.skipped},
                   {"steps", imp.steps},
                   {"max_inside", imp.max_inside},
                   {"pass", imp.skipped || imp.max_inside <= kImpermeabilityTol}}}};
  write_json(fs::path(cfg.output_dir) / "obstacle_check.json", report);
  if (imp.skipped) {
    out << "impermeability test skipped (no obstacle)\n";
    return kExitOk;
  }
  out << "max interior amplitude after " << imp.steps << " steps "
      << format_double(imp.max_inside) << "\n";
  return imp.max_inside <= kImpermeabilityTol ? kExitOk : kExitGuard;
}

}  // namespace

void apply_overrides(ExperimentConfig& cfg, const Overrides& o) {
  if (o.tau) cfg.schedule.tau = *o.tau;
  if (o.steps) cfg.schedule.steps = *o.steps;
  if (o.scheme) cfg.scheme = parse_step_scheme(*o.scheme);
  if (o.bc) cfg.bc = parse_boundary(*o.bc);
  if (o.output_dir) cfg.output_dir = *o.output_dir;
  if (o.fdm_tau) cfg.fdm_tau = *o.fdm_tau;
  if (o.oracle) cfg.oracle = true;
  cfg.validate();
}

ObstacleSpec load_obstacle(const ExperimentConfig& cfg) {
  ObstacleSpec o;
  if (!cfg.obstacle_mask.empty()) {
    const Mask m = read_mask(cfg.resolve(cfg.obstacle_mask));
    if (m.nx_points != cfg.grid.points_x() || m.ny_points != cfg.grid.points_y()) {
      throw ParseError("mask '" + cfg.obstacle_mask + "' is " + std::to_string(m.nx_points) +
                       " x " + std::to_string(m.ny_points) + ", the grid is " +
                       std::to_string(cfg.grid.points_x()) + " x " +
                       std::to_string(cfg.grid.points_y()));
    }
    o = decompose_mask(m, cfg.grid);
  } else if (!cfg.obstacle_cells.empty()) {
    o = read_cells(cfg.resolve(cfg.obstacle_cells));
  }
  o.validate(cfg.grid);
  return o;
}

FieldGrid field_from_vector(const CVec& f, const RegisterLayout& layout) {
  std::vector<cplx> amps(f.data(), f.data() + f.size());
  return extract_field(StateVector(layout.num_qubits(), std::move(amps)), layout, 1.0);
}

CompareResult run_compare(const ExperimentConfig& cfg, double coarse_horizon) {
  require_conservative(cfg.params);
  check_sources(cfg);
  const RegisterLayout lay = RegisterLayout::lee(cfg.grid);
  if (lay.num_qubits() > kOracleMaxQubits) {
    throw NumericalGuard("compare needs the exponential reference, refused above " +
                         std::to_string(kOracleMaxQubits) + " qubits");
  }
  const double tau = cfg.schedule.tau;
  const long ratio = std::lround(tau / cfg.fdm_tau);
  if (ratio < 1 || std::abs(static_cast<double>(ratio) * cfg.fdm_tau - tau) > 1e-9 * tau) {
    throw BoundsError("fdm_tau must divide tau");
  }
  const ObstacleSpec obstacle = load_obstacle(cfg);
  const ObstacleSpec* obs = obstacle.empty() ? nullptr : &obstacle;
  const PreparedState prep = prepare_point_source(cfg.grid, cfg.sources);
  const Circuit step = trotter_step(cfg.params, cfg.grid, tau, cfg.bc, obs, cfg.scheme);
  const SparseOperator a = lee_generator(cfg.params, cfg.grid, cfg.bc, obs, cfg.scheme);
  const CVec f0 = prep.norm_factor * to_vec(prep.state);

  const auto snaps =
      evolve(prep.state, step, cfg.schedule, cfg.snapshot_every, prep.norm_factor, lay);
  const int r = static_cast<int>(ratio);
  const FdmResult fdm = fdm_evolve(a, f0, cfg.fdm_tau, cfg.schedule.steps * r, cfg.snapshot_every * r);

  CompareResult out;
  out.fdm_diverged = fdm.diverged;
  CVec exact = f0;
  double t = 0.0;
  const double n0 = f0.norm();
  for (const auto& s : snaps) {
    if (s.time > t) exact = expm_apply(a, exact, s.time - t);
    t = s.time;
    const FieldGrid ref = field_from_vector(exact, lay);
    CompareRow row;
    row.step = s.step;
    row.time = s.time;
    row.quantum_norm = s.norm;
    row.l2_quantum = l2_distance(s.field, ref, Component::P);
    const auto it = std::find_if(fdm.snapshots.begin(), fdm.snapshots.end(),
                                 [&](const FdmSnapshot& f) { return f.step == s.step * r; });
    if (it == fdm.snapshots.end()) {
      row.l2_fdm = std::numeric_limits<double>::infinity();
      row.fdm_growth = std::numeric_limits<double>::infinity();
    } else {
      row.l2_fdm = l2_distance(field_from_vector(it->state, lay), ref, Component::P);
      row.fdm_growth = n0 > 0.0 ? it->norm / n0 : 1.0;
    }
    out.rows.push_back(row);
  }

  out.coarse_horizon = coarse_horizon > 0.0 ? coarse_horizon : cfg.schedule.total_time();
  const int coarse_steps = static_cast<int>(std::lround(out.coarse_horizon / tau));
  const FdmResult coarse = fdm_evolve(a, f0, tau, coarse_steps, std::max(coarse_steps, 1));
  out.coarse_diverged = coarse.diverged;
  out.coarse_diverged_at = coarse.diverged ? coarse.diverged_at_step * tau : -1.0;
  out.coarse_max_growth = coarse.max_growth;
  return out;
}

GateCountResult run_gate_count(const ExperimentConfig& cfg, int n_min, int n_max) {
  require_conservative(cfg.params);
  if (n_min < 1 || n_max < n_min) throw BoundsError("need 1 <= n_min <= n_max");
  GateCountResult res;
  for (int n = n_min; n <= n_max; ++n) {
    const GridSpec g{n, n, cfg.grid.l};
    const Circuit v = trotter_step(cfg.params, g, cfg.schedule.tau, cfg.bc, nullptr, cfg.scheme);
    res.rows.push_back({n, count(v), envelope(n)});
  }
  const auto m = static_cast<Eigen::Index>(res.rows.size());
  if (m >= 3) {
    Eigen::MatrixXd x(m, 3);
    Eigen::VectorXd y(m);
    for (Eigen::Index i = 0; i < m; ++i) {
      const double n = res.rows[static_cast<std::size_t>(i)].n;
      x(i, 0) = n * n;
      x(i, 1) = n;
      x(i, 2) = 1.0;
      y(i) = static_cast<double>(res.rows[static_cast<std::size_t>(i)].count.cnot_after_decomposition);
    }
    const Eigen::Vector3d coef = x.colPivHouseholderQr().solve(y);
    res.a = coef(0);
    res.b = coef(1);
    res.c = coef(2);
    res.relative_residual = (x * coef - y).norm() / y.norm();
  }
  return res;
}

ImpermeabilityResult run_impermeability(const ExperimentConfig& cfg, const ObstacleSpec& o,
                                        int steps) {
  ImpermeabilityResult res;
  res.steps = steps;
  if (o.empty()) {
    res.skipped = true;
    return res;
  }
  require_conservative(cfg.params);
  const RegisterLayout lay = RegisterLayout::lee(cfg.grid);
  const Mask m = o.rasterize(cfg.grid);
  std::mt19937_64 rng(cfg.seed);
  std::normal_distribution<double> nd;
  std::vector<cplx> amps(lay.dim());
  for (std::uint64_t i = 0; i < lay.dim(); ++i) {
    const auto d = lay.decode(i);
    const bool empty = d.component == Component::Zero || m.at(d.x, d.y);
    const cplx z(nd(rng), nd(rng));
    amps[i] = empty ? cplx{} : z;
  }
  StateVector s(lay.num_qubits(), std::move(amps));
  s.normalize();
  const Circuit step =
      trotter_step(cfg.params, cfg.grid, cfg.schedule.tau, BoundaryCondition::Dirichlet, &o,
                   StepScheme::Central);
  for (int k = 0; k < steps; ++k) {
    apply_circuit(s, step);
    res.max_inside = std::max(res.max_inside, max_amplitude_inside(s, o, cfg.grid, lay));
  }
  return res;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum circuits for the 2D linearized Euler equations", "leeq"};
  app.require_subcommand(1);

  std::string config_path;
  Overrides ov;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "experiment config file");
  };
  auto add_overrides = [&](CLI::App* sub) {
    sub->add_option("--tau", ov.tau, "Trotter step size");
    sub->add_option("--steps", ov.steps, "number of steps");
    sub->add_option("--scheme", ov.scheme, "central or updown");
    sub->add_option("--bc", ov.bc, "dirichlet or periodic");
    sub->add_option("--out", ov.output_dir, "output directory");
    sub->add_flag("--oracle", ov.oracle, "compare against the exponential reference");
    sub->add_option("--dump-circuit", ov.dump_circuit, "write the step circuit as text");
  };

  auto* sim = app.add_subcommand("simulate", "run the quantum evolution and write snapshots");
  add_common(sim);
  add_overrides(sim);
  sim->get_option("--config")->required();

  auto* cmp = app.add_subcommand("compare", "quantum vs forward Euler vs exponential");
  add_common(cmp);
  add_overrides(cmp);
  cmp->add_option("--fdm-tau", ov.fdm_tau, "forward Euler step size");
  cmp->get_option("--config")->required();

  int n_min = 3, n_max = 8;
  std::string gc_out;
  auto* gc = app.add_subcommand("gate-count", "gate tallies of one step for a range of n");
  add_common(gc);
  gc->add_option("--n-min", n_min, "smallest n per axis");
  gc->add_option("--n-max", n_max, "largest n per axis");
  gc->add_option("--scheme", ov.scheme, "central or updown");
  gc->add_option("--bc", ov.bc, "dirichlet or periodic");
  gc->add_option("--json", gc_out, "also write the report here");

  bool measure = false;
  auto* bd = app.add_subcommand("bound", "Trotter error bound of one step");
  add_common(bd);
  add_overrides(bd);
  bd->add_flag("--measure", measure, "also measure the error with dense operators");

  std::string mask_path, cells_path;
  int check_steps = 100;
  auto* oc = app.add_subcommand("obstacle-check", "cell decomposition and impermeability test");
  add_common(oc);
  oc->add_option("--mask", mask_path, "raster mask file");
  oc->add_option("--cells", cells_path, "cell list file");
  oc->add_option("--steps", check_steps, "steps of the impermeability test");
  oc->add_option("--out", ov.output_dir, "output directory");
  oc->add_option("--tau", ov.tau, "Trotter step size");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    ExperimentConfig cfg;
    const bool have_config = !config_path.empty();
    if (have_config) cfg = load_config(config_path);
    apply_overrides(cfg, ov);
    if (*sim) return cmd_simulate(cfg, ov, out);
    if (*cmp) return cmd_compare(cfg, out);
    if (*gc) return cmd_gate_count(cfg, n_min, n_max, gc_out, out);
    if (*bd) return cmd_bound(cfg, measure, out);
    if (*oc) {
      if (!have_config) cfg.grid.l = 1.0;
      if (mask_path.empty() && cells_path.empty() && !have_config) {
        throw ParseError("obstacle-check needs --mask, --cells or --config");
      }
      return cmd_obstacle_check(cfg, mask_path, cells_path, have_config, check_steps, out);
    }
  } catch (const NumericalGuard& e) {
    err << "refused: " << e.what() << "\n";
    return kExitGuard;
  } catch (const ConvergenceError& e) {
    err << "refused: " << e.what() << "\n";
    return kExitGuard;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace leeq::cli
