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

#include "leeq/cli/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "leeq/errors.hpp"

namespace leeq::cli {

namespace {

char component_letter(Component c) {
  switch (c) {
    case Component::P: return 'p';
    case Component::U: return 'u';
    case Component::V: return 'v';
    default: break;
  }
  throw BoundsError("the zero sector has no snapshot");
}

int log2_exact(std::uint64_t v) {
  int k = 0;
  while ((std::uint64_t{1} << k) < v) ++k;
  return (std::uint64_t{1} << k) == v ? k : -1;
}

std::ifstream open_in(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw ParseError("cannot open '" + p.string() + "'");
  return in;
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Mask parse_mask(std::istream& in) {
  std::vector<std::string> rows;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    for (char ch : line) {
      if (ch != '0' && ch != '1') {
        throw ParseError("mask line " + std::to_string(line_no) + ": unexpected character '" +
                         std::string(1, ch) + "'");
      }
    }
    if (!rows.empty() && line.size() != rows[0].size()) {
      throw ParseError("mask line " + std::to_string(line_no) + ": row has " +
                       std::to_string(line.size()) + " columns, expected " +
                       std::to_string(rows[0].size()));
    }
    rows.push_back(line);
  }
  if (rows.empty()) throw ParseError("mask is empty");
  Mask m(rows[0].size(), rows.size());
  for (std::uint64_t y = 0; y < m.ny_points; ++y) {
    for (std::uint64_t x = 0; x < m.nx_points; ++x) m.at(x, y) = rows[y][x] == '1';
  }
  return m;
}

Mask read_mask(const std::filesystem::path& path) {
  auto in = open_in(path);
  return parse_mask(in);
}

GridSpec grid_for_mask(const Mask& mask, double l) {
  const int kx = log2_exact(mask.nx_points), ky = log2_exact(mask.ny_points);
  if (kx < 1 || ky < 1) {
    throw ParseError("mask sides must be powers of two of at least 2, got " +
                     std::to_string(mask.nx_points) + " x " + std::to_string(mask.ny_points));
  }
  GridSpec g{kx, ky, l};
  g.validate();
  return g;
}

ObstacleSpec parse_cells(std::istream& in) {
  ObstacleSpec o;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw ParseError("cell line " + std::to_string(line_no) + ": expected 'x_prefix,y_prefix'");
    }
    BinaryCell c{line.substr(0, comma), line.substr(comma + 1)};
    for (const auto* s : {&c.x_prefix, &c.y_prefix}) {
      if (s->empty() || s->find_first_not_of("01") != std::string::npos) {
        throw ParseError("cell line " + std::to_string(line_no) + ": bad prefix '" + *s + "'");
      }
    }
    o.cells.push_back(std::move(c));
  }
  return o;
}

ObstacleSpec read_cells(const std::filesystem::path& path) {
  auto in = open_in(path);
  return parse_cells(in);
}

void write_snapshot_csv(std::ostream& out, const FieldGrid& field, Component component,
                        double time) {
  const auto& data = field.component(component);
  out << "# time=" << format_double(time) << " component=" << component_letter(component)
      << " norm_factor=" << format_double(field.norm_factor) << "\n";
  for (std::uint64_t y = 0; y < field.ny_points; ++y) {
    for (std::uint64_t x = 0; x < field.nx_points; ++x) {
      if (x) out << ',';
      out << format_double(data[field.at(x, y)]);
    }
    out << "\n";
  }
}

std::string snapshot_filename(int step, Component component) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "snap_%06d_%c.csv", step, component_letter(component));
  return buf;
}

void write_json(const std::filesystem::path& path, const nlohmann::json& doc) {
  write_text(path, doc.dump(2) + "\n");
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out << text;
}

}  // namespace leeq::cli
