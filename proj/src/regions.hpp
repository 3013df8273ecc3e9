// Copyright 2026 The Dentile Authors.
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

#ifndef DENTILE_REGIONS_HPP
#define DENTILE_REGIONS_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "numeric.hpp"

namespace dentile {

// Unit square [x,x+1] x [y,y+1] of the square lattice.
struct Cell {
  int x, y;
  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

// Unit triangle of the triangular lattice in sheared coordinates: the lattice
// cell (x,y) splits into an up triangle {(x,y),(x+1,y),(x,y+1)} and a down
// triangle {(x+1,y),(x,y+1),(x+1,y+1)}.
struct TriCell {
  int x, y;
  bool down;
  friend bool operator==(const TriCell&, const TriCell&) = default;
  friend auto operator<=>(const TriCell&, const TriCell&) = default;
};

enum class Color { White, Black };

// Aztec diamond of the given order, rows of heights 2,4,...,2n,2n,...,4,2
// centered on the y axis; cell (x,y) belongs iff |x+1/2| + |y+1/2| <= n.
// Dents are 1-based boundary indices counted from bottom to top. The
// augmented variant adds the two squares hugging each dent position instead
// of removing anything.
struct AztecRegion {
  int order = 0;
  std::vector<int> sw_dents;  // sorted, in [1, order]
  std::vector<int> se_dents;  // sorted, in [1, order]
  bool augmented = false;

  bool plain() const { return sw_dents.empty() && se_dents.empty(); }
  bool balanced() const { return sw_dents.size() == se_dents.size(); }
  long long cell_count() const;
  std::vector<Cell> cells() const;
  bool contains(int x, int y) const;

  // Checkerboard with the squares along the northwestern side white.
  Color color(int x, int y) const {
    return ((x + y + order) % 2 + 2) % 2 == 0 ? Color::White : Color::Black;
  }

  Cell sw_dent_cell(int i) const { return {-i, i - order - 1}; }
  Cell se_dent_cell(int j) const { return {j - 1, j - order - 1}; }
};

// Hexagon with side lengths a,b,c,a,b,c clockwise from the top, drawn in
// sheared coordinates with the bottom side from (0,0) to (a,0). Dents:
//   north_dents: i-th down triangle along the top side, counted right to left;
//   ne_dents:    j-th up triangle along the NE side, counted top to bottom;
//   on the opposite-side variant the second set instead indexes up triangles
//   along the bottom side, counted right to left.
struct HexRegion {
  int a = 0, b = 0, c = 0;
  std::vector<int> north_dents;
  std::vector<int> ne_dents;
  bool opposite_variant = false;

  bool plain() const { return north_dents.empty() && ne_dents.empty(); }
  bool balanced() const { return north_dents.size() == ne_dents.size(); }
  long long cell_count() const;
  std::vector<TriCell> cells() const;
  bool vertex_inside(int x, int y) const;
  bool contains(const TriCell& t) const;

  TriCell north_dent_cell(int i) const { return {a - b - i, b + c - 1, true}; }
  TriCell ne_dent_cell(int j) const { return {a - b + j - 1, c + b - j, false}; }
  TriCell south_dent_cell(int j) const { return {a - j, 0, false}; }
};

struct DualGraph {
  int n_vertices = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<Color> colors;
  // planar coordinates of each vertex (cell anchor); for hexagons the third
  // component distinguishes orientation
  std::vector<std::array<int, 3>> coords;
  long long white_minus_black() const;
};

AztecRegion build_aztec(int n, std::vector<int> sw, std::vector<int> se, bool augmented);
HexRegion build_hexagon(int a, int b, int c, std::vector<int> north, std::vector<int> second,
                        bool opposite_variant);

DualGraph dual_graph(const AztecRegion& r);
DualGraph dual_graph(const HexRegion& r);

// A lattice point for the nonintersecting-path encodings. For Aztec regions
// it is the midpoint of the vertical unit segment x = X, y in [Y, Y+1]; for
// hexagons the bottom end (X, Y) of a vertical lattice edge.
struct LatticePoint {
  int x, y;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

enum class PathGeometry {
  AztecDelannoy,  // steps SE=(1,-1), NE=(1,1), E=(2,0); Delannoy counts
  HexBinomial,    // steps (1,0), (1,-1); binomial counts
};

struct LgvEndpoints {
  PathGeometry geometry = PathGeometry::AztecDelannoy;
  std::vector<LatticePoint> starts;
  std::vector<LatticePoint> ends;
  // marked-lattice parity for the Aztec marking construction: a point (X,Y)
  // is marked iff (X+Y+order) mod 2 == parity
  int parity = 1;
};

// Start/end points of the path encoding of tilings.
//  - plain Aztec: n+1 pairs on the lower boundary (midpoint below the south
//    corner first, then bottom to top);
//  - augmented Aztec: the same set with start i and end j removed;
//  - dented Aztec: the dent edge midpoints first, then the NW/NE side points;
//  - hexagons: dent points first, then the NW-side points (starts) and the
//    SE-side points (ends).
LgvEndpoints lgv_endpoints(const AztecRegion& r);
LgvEndpoints lgv_endpoints(const HexRegion& r);

// Unconstrained path count between two points under the given geometry.
BigInt pairwise_path_count(PathGeometry g, LatticePoint from, LatticePoint to);

// JSON document {kind, n|a,b,c, dents, cells}.
std::string region_json(const AztecRegion& r);
std::string region_json(const HexRegion& r);

}  // namespace dentile

#endif  // DENTILE_REGIONS_HPP
