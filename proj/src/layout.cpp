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

#include "leeq/layout.hpp"

#include <cmath>
#include <string>

namespace leeq {

void GridSpec::validate() const {
  if (n_x < 1 || n_y < 1) {
    throw BoundsError("grid needs at least one qubit per axis (got n_x=" + std::to_string(n_x) +
                      ", n_y=" + std::to_string(n_y) + ")");
  }
  if (n_x + n_y > 30) throw BoundsError("grid too large");
  if (!(l > 0.0) || !std::isfinite(l)) throw BoundsError("lattice constant must be positive");
}

std::vector<int> RegisterLayout::axis_qubits(Axis a) const {
  std::vector<int> out;
  for (int i = 1; i <= bits(a); ++i) out.push_back(q(a, i));
  return out;
}

}  // namespace leeq
