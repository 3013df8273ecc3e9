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

#ifndef DENTILE_SAMPLER_HPP
#define DENTILE_SAMPLER_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "regions.hpp"

namespace dentile {

// A domino tiling as a perfect matching of the region's cells: partner[i] is
// the cell index matched with cell i.
struct Tiling {
  AztecRegion region;
  std::vector<Cell> cells;
  std::vector<int> partner;

  bool valid() const;
  // canonical key for state-counting tests
  std::string key() const;
};

// Any valid tiling, by augmenting-path matching on the dual graph. Throws
// DomainError when the region is untileable.
Tiling initial_tiling(const AztecRegion& r);

// Chain RNG: std::mt19937_64, with per-stream seeds derived through a
// splitmix64 scramble so chains started from (seed, index) are independent.
std::uint64_t splitmix64(std::uint64_t x);

struct FlipChain {
  explicit FlipChain(Tiling t);

  Tiling tiling;
  // lower-left cell indices of the 2x2 blocks fully inside the region,
  // stored as 4 cell ids each
  std::vector<std::array<int, 4>> blocks;

  // rotates the two parallel dominoes in block b if present; returns whether
  // a flip happened (flipping the same block twice restores the tiling)
  bool flip_block(std::size_t b);
  // one chain step: uniform random block, flip when flippable
  bool flip_step(std::mt19937_64& rng);
};

// Deterministic in (region, flips, seed).
Tiling sample(const AztecRegion& r, std::uint64_t flips, std::uint64_t seed);

// Nonintersecting-path encoding of a tiling. For plain and augmented regions
// the paths run between the lower-boundary points (including the trivial
// path below the south corner); for dented regions they run from the dents
// and the NW side to the dents and the NE side. Endpoints equal
// lgv_endpoints(region) in order.
struct PathFamily {
  std::vector<std::vector<LatticePoint>> paths;
};
PathFamily encode_paths(const Tiling& t);

enum class DominoType { N, S, E, W };
DominoType domino_type(const Tiling& t, int cell_index);

struct FrozenStats {
  double radius_fraction = 0.0;
  // per sector: dominoes outside the radius whose type matches the sector
  struct Sector {
    long long matching = 0, total = 0;
    double fraction() const { return total ? double(matching) / total : 0.0; }
  };
  Sector n, s, e, w;
  // per-domino type map, one entry per matched pair (anchor cell, type)
  std::vector<std::pair<Cell, DominoType>> types;
  std::string json() const;
};
FrozenStats frozen_stats(const Tiling& t, double radius_fraction);

struct SvgOptions {
  bool show_paths = false;
  int unit_px = 10;
  std::uint64_t seed = 0;
  std::uint64_t flips = 0;
};
std::string render_svg(const Tiling& t, const SvgOptions& opts);

// Default burn-in heuristic: 200 * (cell count)^2 flips. Documented as a
// heuristic, not a mixing bound.
std::uint64_t default_burn_in(const AztecRegion& r);

}  // namespace dentile

#endif  // DENTILE_SAMPLER_HPP
