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

#include "leeq/cli/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "leeq/errors.hpp"

namespace leeq::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct LineError {
  int line;
  std::string key;
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("config line " + std::to_string(line) + ", key '" + key + "': " + what);
  }
};

double to_double(const std::string& v, const LineError& at) {
  std::size_t used = 0;
  double d = 0.0;
  try {
    d = std::stod(v, &used);
  } catch (const std::exception&) {
    at.fail("expected a number, got '" + v + "'");
  }
  if (used != v.size() || !std::isfinite(d)) at.fail("expected a finite number, got '" + v + "'");
  return d;
}

long long to_int(const std::string& v, const LineError& at) {
  std::size_t used = 0;
  long long i = 0;
  try {
    i = std::stoll(v, &used);
  } catch (const std::exception&) {
    at.fail("expected an integer, got '" + v + "'");
  }
  if (used != v.size()) at.fail("expected an integer, got '" + v + "'");
  return i;
}

bool to_bool(const std::string& v, const LineError& at) {
  if (v == "true" || v == "1") return true;
  if (v == "false" || v == "0") return false;
  at.fail("expected true or false, got '" + v + "'");
}

}  // namespace

void ExperimentConfig::validate() const {
  grid.validate();
  params.validate();
  schedule.validate();
  if (snapshot_every < 1) throw BoundsError("snapshot_every must be at least 1");
  if (!(fdm_tau > 0.0) || !std::isfinite(fdm_tau)) throw BoundsError("fdm_tau must be positive");
  if (!obstacle_mask.empty() && !obstacle_cells.empty()) {
    throw ParseError("set at most one of obstacle_mask and obstacle_cells");
  }
}

std::filesystem::path ExperimentConfig::resolve(const std::string& p) const {
  const std::filesystem::path path(p);
  return path.is_absolute() ? path : base_dir / path;
}

ExperimentConfig parse_config(std::istream& in, const std::filesystem::path& base_dir) {
  ExperimentConfig cfg;
  cfg.base_dir = base_dir;
  bool version_seen = false;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParseError("config line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    const LineError at{line_no, key};
    if (val.empty()) at.fail("missing value");

    if (key == "config_version") {
      if (to_int(val, at) != kConfigVersion) at.fail("unsupported version " + val);
      version_seen = true;
    } else if (key == "n_x") {
      cfg.grid.n_x = static_cast<int>(to_int(val, at));
    } else if (key == "n_y") {
      cfg.grid.n_y = static_cast<int>(to_int(val, at));
    } else if (key == "l") {
      cfg.grid.l = to_double(val, at);
    } else if (key == "u_bar") {
      cfg.params.u_bar = to_double(val, at);
    } else if (key == "rho_bar") {
      cfg.params.rho_bar = to_double(val, at);
    } else if (key == "c") {
      cfg.params.c = to_double(val, at);
    } else if (key == "tau") {
      cfg.schedule.tau = to_double(val, at);
    } else if (key == "steps") {
      cfg.schedule.steps = static_cast<int>(to_int(val, at));
    } else if (key == "snapshot_every") {
      cfg.snapshot_every = static_cast<int>(to_int(val, at));
    } else if (key == "bc") {
      try {
        cfg.bc = parse_boundary(val);
      } catch (const Error& e) {
        at.fail(e.what());
      }
    } else if (key == "scheme") {
      try {
        cfg.scheme = parse_step_scheme(val);
      } catch (const Error& e) {
        at.fail(e.what());
      }
    } else if (key == "obstacle_mask") {
      cfg.obstacle_mask = val;
    } else if (key == "obstacle_cells") {
      cfg.obstacle_cells = val;
    } else if (key == "source") {
      // x y width pressure
      std::istringstream is(val);
      long long x = -1, y = -1, w = -1;
      std::string p;
      if (!(is >> x >> y >> w >> p) || x < 0 || y < 0 || w < 1) {
        at.fail("expected 'x y width pressure'");
      }
      std::string extra;
      if (is >> extra) at.fail("trailing text '" + extra + "'");
      cfg.sources.push_back({static_cast<std::uint64_t>(x), static_cast<std::uint64_t>(y),
                             static_cast<std::uint64_t>(w), to_double(p, at)});
    } else if (key == "output_dir") {
      cfg.output_dir = val;
    } else if (key == "fdm_tau") {
      cfg.fdm_tau = to_double(val, at);
    } else if (key == "oracle") {
      cfg.oracle = to_bool(val, at);
    } else if (key == "seed") {
      const long long s = to_int(val, at);
      if (s < 0) at.fail("seed must be non-negative");
      cfg.seed = static_cast<std::uint64_t>(s);
    } else {
      at.fail("unknown key");
    }
  }
  if (!version_seen) throw ParseError("config is missing 'config_version'");
  try {
    cfg.validate();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(std::string("invalid config: ") + e.what());
  }
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config '" + path.string() + "'");
  return parse_config(in, path.parent_path().empty() ? "." : path.parent_path());
}

std::string serialize_config(const ExperimentConfig& cfg) {
  std::ostringstream os;
  os << "config_version = " << kConfigVersion << "\n";
  os << "n_x = " << cfg.grid.n_x << "\n";
  os << "n_y = " << cfg.grid.n_y << "\n";
  os << "l = " << fmt(cfg.grid.l) << "\n";
  os << "u_bar = " << fmt(cfg.params.u_bar) << "\n";
  os << "rho_bar = " << fmt(cfg.params.rho_bar) << "\n";
  os << "c = " << fmt(cfg.params.c) << "\n";
  os << "tau = " << fmt(cfg.schedule.tau) << "\n";
  os << "steps = " << cfg.schedule.steps << "\n";
  os << "snapshot_every = " << cfg.snapshot_every << "\n";
  os << "bc = " << to_string(cfg.bc) << "\n";
  os << "scheme = " << to_string(cfg.scheme) << "\n";
  if (!cfg.obstacle_mask.empty()) os << "obstacle_mask = " << cfg.obstacle_mask << "\n";
  if (!cfg.obstacle_cells.empty()) os << "obstacle_cells = " << cfg.obstacle_cells << "\n";
  for (const auto& s : cfg.sources) {
    os << "source = " << s.x << " " << s.y << " " << s.width << " " << fmt(s.pressure) << "\n";
  }
  os << "output_dir = " << cfg.output_dir << "\n";
  os << "fdm_tau = " << fmt(cfg.fdm_tau) << "\n";
  os << "oracle = " << (cfg.oracle ? "true" : "false") << "\n";
  os << "seed = " << cfg.seed << "\n";
  return os.str();
}

}  // namespace leeq::cli
