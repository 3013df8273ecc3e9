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

#include "regions.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "json.hpp"
#include "path_numbers.hpp"

namespace dentile {

namespace {

void check_dents(const std::vector<int>& d, int limit, const char* what) {
  int prev = 0;
  for (int v : d) {
    if (v < 1 || v > limit) throw DomainError(std::string(what) + ": dent index out of range");
    if (v <= prev) throw DomainError(std::string(what) + ": dent indices must be strictly increasing");
    prev = v;
  }
}

}  // namespace

AztecRegion build_aztec(int n, std::vector<int> sw, std::vector<int> se, bool augmented) {
  if (n < 1) throw DomainError("build_aztec: order must be >= 1");
  std::sort(sw.begin(), sw.end());
  std::sort(se.begin(), se.end());
  check_dents(sw, n, "sw_dents");
  check_dents(se, n, "se_dents");
  return AztecRegion{n, std::move(sw), std::move(se), augmented};
}

bool AztecRegion::contains(int x, int y) const {
  long long lhs = std::abs(2 * x + 1) + std::abs(2 * y + 1);
  if (lhs > 2 * order) {
    if (!augmented) return false;
    for (int i : sw_dents) {
      Cell d = sw_dent_cell(i);
      if (x == d.x - 1 && y == d.y) return true;
    }
    for (int j : se_dents) {
      Cell d = se_dent_cell(j);
      if (x == d.x + 1 && y == d.y) return true;
    }
    return false;
  }
  if (!augmented) {
    for (int i : sw_dents) {
      Cell d = sw_dent_cell(i);
      if (x == d.x && y == d.y) return false;
    }
    for (int j : se_dents) {
      Cell d = se_dent_cell(j);
      if (x == d.x && y == d.y) return false;
    }
  }
  return true;
}

long long AztecRegion::cell_count() const {
  long long base = 2LL * order * (order + 1);
  long long delta = static_cast<long long>(sw_dents.size() + se_dents.size());
  return augmented ? base + delta : base - delta;
}

std::vector<Cell> AztecRegion::cells() const {
  std::vector<Cell> out;
  out.reserve(cell_count());
  for (int y = -order; y < order; ++y) {
    int lo = (y >= 0) ? -(order - y) : -(order + y + 1);
    int hi = (y >= 0) ? (order - y) : (order + y + 1);  // exclusive
    for (int x = lo; x < hi; ++x)
      if (contains(x, y)) out.push_back({x, y});
  }
  if (augmented) {
    for (int i : sw_dents) {
      Cell d = sw_dent_cell(i);
      out.push_back({d.x - 1, d.y});
    }
    for (int j : se_dents) {
      Cell d = se_dent_cell(j);
      out.push_back({d.x + 1, d.y});
    }
    std::sort(out.begin(), out.end());
  }
  return out;
}

HexRegion build_hexagon(int a, int b, int c, std::vector<int> north, std::vector<int> second,
                        bool opposite_variant) {
  if (a < 1 || b < 1 || c < 1) throw DomainError("build_hexagon: sides must be >= 1");
  std::sort(north.begin(), north.end());
  std::sort(second.begin(), second.end());
  check_dents(north, a, "north_dents");
  check_dents(second, opposite_variant ? a : b, "second dent set");
  return HexRegion{a, b, c, std::move(north), std::move(second), opposite_variant};
}

bool HexRegion::vertex_inside(int x, int y) const {
  return 0 <= y && y <= b + c && std::max(-y, -b) <= x && x <= std::min(a, a + c - y);
}

bool HexRegion::contains(const TriCell& t) const {
  bool in;
  if (!t.down)
    in = vertex_inside(t.x, t.y) && vertex_inside(t.x + 1, t.y) && vertex_inside(t.x, t.y + 1);
  else
    in = vertex_inside(t.x + 1, t.y) && vertex_inside(t.x, t.y + 1) &&
         vertex_inside(t.x + 1, t.y + 1);
  if (!in) return false;
  for (int i : north_dents)
    if (t == north_dent_cell(i)) return false;
  for (int j : ne_dents)
    if (t == (opposite_variant ? south_dent_cell(j) : ne_dent_cell(j))) return false;
  return true;
}

long long HexRegion::cell_count() const {
  return 2LL * (a * b + b * c + c * a) -
         static_cast<long long>(north_dents.size() + ne_dents.size());
}

std::vector<TriCell> HexRegion::cells() const {
  std::vector<TriCell> out;
  out.reserve(cell_count());
  for (int y = 0; y < b + c; ++y)
    for (int x = -b - 1; x <= a; ++x)
      for (bool down : {false, true}) {
        TriCell t{x, y, down};
        if (contains(t)) out.push_back(t);
      }
  return out;
}

long long DualGraph::white_minus_black() const {
  long long d = 0;
  for (Color c : colors) d += (c == Color::White) ? 1 : -1;
  return d;
}

DualGraph dual_graph(const AztecRegion& r) {
  auto cs = r.cells();
  std::map<Cell, int> idx;
  for (int i = 0; i < (int)cs.size(); ++i) idx[cs[i]] = i;
  DualGraph g;
  g.n_vertices = cs.size();
  for (int i = 0; i < (int)cs.size(); ++i) {
    g.colors.push_back(r.color(cs[i].x, cs[i].y));
    g.coords.push_back({cs[i].x, cs[i].y, 0});
    for (auto [dx, dy] : {std::pair{1, 0}, std::pair{0, 1}}) {
      auto it = idx.find({cs[i].x + dx, cs[i].y + dy});
      if (it != idx.end()) g.edges.emplace_back(i, it->second);
    }
  }
  return g;
}

DualGraph dual_graph(const HexRegion& r) {
  auto cs = r.cells();
  std::map<TriCell, int> idx;
  for (int i = 0; i < (int)cs.size(); ++i) idx[cs[i]] = i;
  DualGraph g;
  g.n_vertices = cs.size();
  for (int i = 0; i < (int)cs.size(); ++i) {
    const TriCell& t = cs[i];
    g.colors.push_back(t.down ? Color::Black : Color::White);
    g.coords.push_back({t.x, t.y, t.down ? 1 : 0});
    if (!t.down) continue;
    // every edge joins the down triangle (x,y) to an up neighbor
    for (const TriCell& u : {TriCell{t.x, t.y, false}, TriCell{t.x + 1, t.y, false},
                             TriCell{t.x, t.y + 1, false}}) {
      auto it = idx.find(u);
      if (it != idx.end()) g.edges.emplace_back(it->second, i);
    }
  }
  return g;
}

LgvEndpoints lgv_endpoints(const AztecRegion& r) {
  const int n = r.order;
  LgvEndpoints e;
  e.geometry = PathGeometry::AztecDelannoy;
  if (r.augmented || r.plain()) {
    // marked lattice: vertical-segment midpoints with a white square to the
    // left, i.e. (X+Y+n) odd
    e.parity = 1;
    std::set<int> swd(r.sw_dents.begin(), r.sw_dents.end());
    std::set<int> sed(r.se_dents.begin(), r.se_dents.end());
    e.starts.push_back({0, -n - 1});  // w
    e.ends.push_back({0, -n - 1});
    for (int i = 1; i <= n; ++i)
      if (!r.augmented || !swd.count(i)) e.starts.push_back({-i, i - n - 1});
    for (int j = 1; j <= n; ++j)
      if (!r.augmented || !sed.count(j)) e.ends.push_back({j, j - n - 1});
  } else {
    // dented region: the other marked lattice, (X+Y+n) even; dent pairs
    // first, then the NW-side starts and NE-side ends bottom to top
    e.parity = 0;
    for (int i : r.sw_dents) {
      Cell d = r.sw_dent_cell(i);
      e.starts.push_back({d.x + 1, d.y});
    }
    for (int y = 0; y < n; ++y) e.starts.push_back({-(n - y), y});
    for (int j : r.se_dents) {
      Cell d = r.se_dent_cell(j);
      e.ends.push_back({d.x, d.y});
    }
    for (int y = 0; y < n; ++y) e.ends.push_back({n - y, y});
  }
  return e;
}

LgvEndpoints lgv_endpoints(const HexRegion& r) {
  LgvEndpoints e;
  e.geometry = PathGeometry::HexBinomial;
  for (int i : r.north_dents) e.starts.push_back({r.a - r.b - i + 1, r.b + r.c - 1});
  for (int y = r.b; y < r.b + r.c; ++y) e.starts.push_back({-r.b, y});
  if (!r.opposite_variant)
    for (int j : r.ne_dents) e.ends.push_back({r.a - r.b + j - 1, r.c + r.b - j});
  else
    for (int j : r.ne_dents) e.ends.push_back({r.a - j, 0});
  for (int y = 0; y < r.c; ++y) e.ends.push_back({r.a, y});
  return e;
}

BigInt pairwise_path_count(PathGeometry g, LatticePoint from, LatticePoint to) {
  long long dx = to.x - from.x, dy = to.y - from.y;
  if (g == PathGeometry::AztecDelannoy) {
    if ((dx + dy) % 2 != 0) return 0;
    long long p = (dx - dy) / 2, q = (dx + dy) / 2;  // SE count + E, NE count + E
    if (p < 0 || q < 0) return 0;
    return delannoy(p, q);
  }
  long long down = -dy, flat = dx + dy;
  if (down < 0 || flat < 0) return 0;
  return binomial(dx, flat);
}

std::string region_json(const AztecRegion& r) {
  nlohmann::json j;
  j["kind"] = r.augmented ? "aztec_augmented" : "aztec";
  j["n"] = r.order;
  j["dents"] = {{"sw", r.sw_dents}, {"se", r.se_dents}};
  auto cells = nlohmann::json::array();
  for (const Cell& c : r.cells()) cells.push_back({c.x, c.y});
  j["cells"] = std::move(cells);
  return j.dump();
}

std::string region_json(const HexRegion& r) {
  nlohmann::json j;
  j["kind"] = r.opposite_variant ? "hexagon_opposite" : "hexagon";
  j["a"] = r.a;
  j["b"] = r.b;
  j["c"] = r.c;
  j["dents"] = {{"north", r.north_dents},
                {r.opposite_variant ? "south" : "ne", r.ne_dents}};
  auto cells = nlohmann::json::array();
  for (const TriCell& t : r.cells()) cells.push_back({t.x, t.y, t.down ? 1 : 0});
  j["cells"] = std::move(cells);
  return j.dump();
}

}  // namespace dentile
