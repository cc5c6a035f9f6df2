# Copyright 2026 The leeq Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Writes a raster mask of a symmetric four-digit airfoil profile.

Rows are y (row 0 is y = 0), columns are x, characters 0/1.
"""

import argparse

import numpy as np


def thickness(xc: np.ndarray, t: float) -> np.ndarray:
    # Half-thickness of a symmetric 4-digit section, closed trailing edge.
    return 5 * t * (0.2969 * np.sqrt(xc) - 0.1260 * xc - 0.3516 * xc**2
                    + 0.2843 * xc**3 - 0.1036 * xc**4)


def airfoil_mask(n: int, chord: float, thick: float, lead: float, aoa_deg: float) -> np.ndarray:
    size = 1 << n
    ys, xs = np.mgrid[0:size, 0:size].astype(float) + 0.5
    cx, cy = lead * size, size / 2
    a = np.deg2rad(aoa_deg)
    # Rotate into the chord frame; positive angle pitches the nose up.
    dx, dy = xs - cx, ys - cy
    u = (dx * np.cos(a) - dy * np.sin(a)) / (chord * size)
    v = (dx * np.sin(a) + dy * np.cos(a)) / (chord * size)
    inside = (u >= 0) & (u <= 1)
    half = np.zeros_like(u)
    half[inside] = thickness(u[inside], thick)
    return (inside & (np.abs(v) <= half)).astype(np.uint8)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=9, help="qubits per axis")
    ap.add_argument("--chord", type=float, default=0.3, help="chord as a fraction of the domain")
    ap.add_argument("--thickness", type=float, default=0.12)
    ap.add_argument("--lead", type=float, default=0.4, help="leading edge x as a fraction")
    ap.add_argument("--aoa", type=float, default=4.0, help="angle of attack in degrees")
    ap.add_argument("out")
    args = ap.parse_args()
    m = airfoil_mask(args.n, args.chord, args.thickness, args.lead, args.aoa)
    with open(args.out, "w") as f:
        for row in m:
            f.write("".join("1" if b else "0" for b in row) + "\n")


if __name__ == "__main__":
    main()
