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

#include "sampler.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace dentile {

bool Tiling::valid() const {
  if (partner.size() != cells.size()) return false;
  std::map<Cell, int> idx;
  for (int i = 0; i < (int)cells.size(); ++i) idx[cells[i]] = i;
  for (int i = 0; i < (int)partner.size(); ++i) {
    int p = partner[i];
    if (p < 0 || p >= (int)partner.size() || p == i || partner[p] != i) return false;
    int dx = std::abs(cells[i].x - cells[p].x), dy = std::abs(cells[i].y - cells[p].y);
    if (dx + dy != 1) return false;
  }
  return true;
}

std::string Tiling::key() const {
  std::ostringstream out;
  for (int i = 0; i < (int)partner.size(); ++i)
    if (partner[i] > i) out << i << ":" << partner[i] << ";";
  return out.str();
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Tiling initial_tiling(const AztecRegion& r) {
  if (!r.balanced()) throw DomainError("initial_tiling: unbalanced dent sets (untileable)");
  Tiling t;
  t.region = r;
  t.cells = r.cells();
  std::map<Cell, int> idx;
  for (int i = 0; i < (int)t.cells.size(); ++i) idx[t.cells[i]] = i;
  std::vector<std::vector<int>> adj(t.cells.size());
  std::vector<int> whites;
  for (int i = 0; i < (int)t.cells.size(); ++i) {
    const Cell c = t.cells[i];
    if (r.color(c.x, c.y) == Color::White) whites.push_back(i);
    for (auto [dx, dy] : {std::pair{1, 0}, std::pair{-1, 0}, std::pair{0, 1}, std::pair{0, -1}}) {
      auto it = idx.find({c.x + dx, c.y + dy});
      if (it != idx.end()) adj[i].push_back(it->second);
    }
  }
  // Kuhn's augmenting-path matching from the white side
  std::vector<int> match(t.cells.size(), -1);
  std::vector<char> used(t.cells.size(), 0);
  std::function<bool(int)> augment = [&](int v) -> bool {
    for (int u : adj[v]) {
      if (used[u]) continue;
      used[u] = 1;
      if (match[u] < 0 || augment(match[u])) {
        match[u] = v;
        match[v] = u;
        return true;
      }
    }
    return false;
  };
  int matched = 0;
  for (int v : whites) {
    std::fill(used.begin(), used.end(), 0);
    if (augment(v)) ++matched;
  }
  if (2LL * matched != (long long)t.cells.size())
    throw DomainError("initial_tiling: region admits no perfect matching");
  t.partner = std::move(match);
  return t;
}

FlipChain::FlipChain(Tiling t) : tiling(std::move(t)) {
  std::map<Cell, int> idx;
  for (int i = 0; i < (int)tiling.cells.size(); ++i) idx[tiling.cells[i]] = i;
  for (int i = 0; i < (int)tiling.cells.size(); ++i) {
    const Cell c = tiling.cells[i];
    auto e = idx.find({c.x + 1, c.y});
    auto nn = idx.find({c.x, c.y + 1});
    auto ne = idx.find({c.x + 1, c.y + 1});
    if (e != idx.end() && nn != idx.end() && ne != idx.end())
      blocks.push_back({i, e->second, nn->second, ne->second});
  }
}

bool FlipChain::flip_block(std::size_t b) {
  auto [sw, se, nw, ne] = blocks[b];
  auto& p = tiling.partner;
  if (p[sw] == se && p[nw] == ne) {  // two horizontals -> two verticals
    p[sw] = nw;
    p[nw] = sw;
    p[se] = ne;
    p[ne] = se;
    return true;
  }
  if (p[sw] == nw && p[se] == ne) {  // two verticals -> two horizontals
    p[sw] = se;
    p[se] = sw;
    p[nw] = ne;
    p[ne] = nw;
    return true;
  }
  return false;
}

bool FlipChain::flip_step(std::mt19937_64& rng) {
  if (blocks.empty()) return false;
  std::uniform_int_distribution<std::size_t> pick(0, blocks.size() - 1);
  return flip_block(pick(rng));
}

Tiling sample(const AztecRegion& r, std::uint64_t flips, std::uint64_t seed) {
  FlipChain chain(initial_tiling(r));
  std::mt19937_64 rng(splitmix64(seed));
  if (chain.blocks.empty()) return chain.tiling;
  std::uniform_int_distribution<std::size_t> pick(0, chain.blocks.size() - 1);
  for (std::uint64_t s = 0; s < flips; ++s) chain.flip_block(pick(rng));
  return chain.tiling;
}

// The four marked-domino shapes. In the marked lattice with parity P (points
// (X,Y) with (X+Y+order) mod 2 == P, standing for the vertical segment
// x = X, y in [Y, Y+1]):
//   horizontal domino whose left cell has (x+y+order) mod 2 != P carries the
//     through marking (x,y) -> (x+2,y);
//   vertical domino whose bottom cell has parity != P carries (x,y) -> (x+1,y+1);
//   vertical domino with bottom parity == P carries (x,y+1) -> (x+1,y);
//   the remaining horizontal type carries no marking.
// Chaining markings from the boundary start points yields the path family.
PathFamily encode_paths(const Tiling& t) {
  const AztecRegion& r = t.region;
  auto endpoints = lgv_endpoints(r);
  const int parity = endpoints.parity;
  auto cell_parity = [&](int x, int y) { return ((x + y + r.order) % 2 + 2) % 2; };

  std::map<LatticePoint, LatticePoint> next;
  for (int i = 0; i < (int)t.cells.size(); ++i) {
    int p = t.partner[i];
    if (p < i) continue;
    Cell a = t.cells[i], b = t.cells[p];
    if (a.y == b.y) {  // horizontal: through marking when its edge points are marked
      int lx = std::min(a.x, b.x), y = a.y;
      if (cell_parity(lx, y) == parity)
        next[{lx, y}] = {lx + 2, y};
    } else {  // vertical: rising or falling diagonal marking
      int x = a.x, ly = std::min(a.y, b.y);
      if (cell_parity(x, ly) == parity)
        next[{x, ly}] = {x + 1, ly + 1};
      else
        next[{x, ly + 1}] = {x + 1, ly};
    }
  }

  PathFamily fam;
  std::set<LatticePoint> end_set(endpoints.ends.begin(), endpoints.ends.end());
  for (const LatticePoint& s : endpoints.starts) {
    std::vector<LatticePoint> path{s};
    LatticePoint cur = s;
    while (true) {
      auto it = next.find(cur);
      if (it == next.end()) break;
      cur = it->second;
      path.push_back(cur);
    }
    if (!end_set.count(cur))
      throw InternalError("encode_paths: path did not terminate at a marked end point");
    fam.paths.push_back(std::move(path));
  }
  return fam;
}

DominoType domino_type(const Tiling& t, int cell_index) {
  int p = t.partner[cell_index];
  Cell a = t.cells[cell_index], b = t.cells[p];
  const AztecRegion& r = t.region;
  if (a.y == b.y) {
    int lx = std::min(a.x, b.x);
    return r.color(lx, a.y) == Color::White ? DominoType::N : DominoType::S;
  }
  int ly = std::min(a.y, b.y);
  return r.color(a.x, ly) == Color::White ? DominoType::E : DominoType::W;
}

FrozenStats frozen_stats(const Tiling& t, double radius_fraction) {
  FrozenStats st;
  st.radius_fraction = radius_fraction;
  const int n = t.region.order;
  for (int i = 0; i < (int)t.cells.size(); ++i) {
    int p = t.partner[i];
    if (p < i) continue;
    Cell a = t.cells[i], b = t.cells[p];
    DominoType ty = domino_type(t, i);
    Cell anchor{std::min(a.x, b.x), std::min(a.y, b.y)};
    st.types.emplace_back(anchor, ty);
    double cx, cy;
    if (a.y == b.y) {
      cx = anchor.x + 1.0;
      cy = anchor.y + 0.5;
    } else {
      cx = anchor.x + 0.5;
      cy = anchor.y + 1.0;
    }
    if (std::hypot(cx, cy) <= radius_fraction * n) continue;
    FrozenStats::Sector* sec;
    DominoType sec_type;
    if (cy >= std::abs(cx)) {
      sec = &st.n;
      sec_type = DominoType::N;
    } else if (cy <= -std::abs(cx)) {
      sec = &st.s;
      sec_type = DominoType::S;
    } else if (cx >= std::abs(cy)) {
      sec = &st.e;
      sec_type = DominoType::E;
    } else {
      sec = &st.w;
      sec_type = DominoType::W;
    }
    sec->total++;
    if (ty == sec_type) sec->matching++;
  }
  return st;
}

namespace {

const char* type_name(DominoType t) {
  switch (t) {
    case DominoType::N: return "N";
    case DominoType::S: return "S";
    case DominoType::E: return "E";
    case DominoType::W: return "W";
  }
  return "?";
}

}  // namespace

std::string FrozenStats::json() const {
  nlohmann::json j;
  j["radius_fraction"] = radius_fraction;
  auto sec = [](const Sector& s) {
    return nlohmann::json{{"matching", s.matching}, {"total", s.total}, {"fraction", s.fraction()}};
  };
  j["sectors"] = {{"N", sec(n)}, {"S", sec(s)}, {"E", sec(e)}, {"W", sec(w)}};
  auto arr = nlohmann::json::array();
  for (const auto& [cell, ty] : types) arr.push_back({cell.x, cell.y, type_name(ty)});
  j["dominoes"] = std::move(arr);
  return j.dump();
}

std::string render_svg(const Tiling& t, const SvgOptions& opts) {
  const int u = opts.unit_px;
  const int n = t.region.order;
  const int pad = 1;
  auto X = [&](double x) { return (x + n + pad) * u; };
  auto Y = [&](double y) { return (n + pad - y) * u; };  // flip so +y is up
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << (2 * (n + pad)) * u
      << "\" height=\"" << (2 * (n + pad)) * u << "\">\n";
  out << "<!-- region order " << n << ", seed " << opts.seed << ", flips " << opts.flips
      << " -->\n";
  auto fill = [](DominoType ty) {
    switch (ty) {
      case DominoType::N: return "#e8554e";
      case DominoType::S: return "#f2b134";
      case DominoType::E: return "#4f86c6";
      case DominoType::W: return "#7bc043";
    }
    return "#888888";
  };
  for (int i = 0; i < (int)t.cells.size(); ++i) {
    int p = t.partner[i];
    if (p < i) continue;
    Cell a = t.cells[i], b = t.cells[p];
    int lx = std::min(a.x, b.x), ly = std::min(a.y, b.y);
    int w = (a.y == b.y) ? 2 : 1, h = (a.y == b.y) ? 1 : 2;
    out << "<rect x=\"" << X(lx) << "\" y=\"" << Y(ly + h) << "\" width=\"" << w * u
        << "\" height=\"" << h * u << "\" fill=\"" << fill(domino_type(t, i))
        << "\" stroke=\"#222\" stroke-width=\"0.8\"/>\n";
  }
  if (opts.show_paths) {
    PathFamily fam = encode_paths(t);
    for (const auto& path : fam.paths) {
      if (path.size() < 2) {
        out << "<circle cx=\"" << X(path[0].x) << "\" cy=\"" << Y(path[0].y + 0.5)
            << "\" r=\"" << u / 4.0 << "\" fill=\"#1f5fd0\"/>\n";
        continue;
      }
      out << "<polyline fill=\"none\" stroke=\"#1f5fd0\" stroke-width=\"" << u / 4.0
          << "\" points=\"";
      for (const auto& pt : path) out << X(pt.x) << "," << Y(pt.y + 0.5) << " ";
      out << "\"/>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

std::uint64_t default_burn_in(const AztecRegion& r) {
  std::uint64_t c = r.cell_count();
  return 200 * c * c;
}

}  // namespace dentile
