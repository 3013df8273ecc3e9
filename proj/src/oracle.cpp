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

#include "oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <unordered_map>

namespace dentile {

namespace {

struct Mask128 {
  std::uint64_t lo = 0, hi = 0;
  bool operator==(const Mask128&) const = default;
  bool test(int i) const { return i < 64 ? (lo >> i) & 1 : (hi >> (i - 64)) & 1; }
  void reset(int i) {
    if (i < 64) lo &= ~(1ULL << i);
    else hi &= ~(1ULL << (i - 64));
  }
  bool any() const { return lo | hi; }
};

struct Mask128Hash {
  std::size_t operator()(const Mask128& m) const {
    std::uint64_t h = m.lo * 0x9e3779b97f4a7c15ULL;
    h ^= m.hi + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

struct MatchingCounter {
  const std::vector<std::vector<int>>& adj;
  std::unordered_map<Mask128, BigInt, Mask128Hash> memo;

  BigInt count(Mask128 mask) {
    if (!mask.any()) return 1;
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    // lowest-index vertex of minimum live degree; a fixed choice keeps the
    // memo table small
    int best = -1, best_deg = 1 << 30;
    for (int v = 0; v < (int)adj.size() && best_deg > 1; ++v) {
      if (!mask.test(v)) continue;
      int d = 0;
      for (int u : adj[v])
        if (mask.test(u)) ++d;
      if (d < best_deg) {
        best = v;
        best_deg = d;
      }
    }
    BigInt total = 0;
    if (best_deg != 0) {
      for (int u : adj[best]) {
        if (!mask.test(u)) continue;
        Mask128 next = mask;
        next.reset(best);
        next.reset(u);
        total += count(next);
      }
    }
    memo.emplace(mask, total);
    return total;
  }
};

}  // namespace

BigInt count_matchings(const DualGraph& g) {
  if (g.n_vertices % 2 != 0) return 0;
  if (g.n_vertices > 128)
    throw DomainError("count_matchings: graph too large for the exact oracle (max 128 vertices)");
  std::vector<std::vector<int>> adj(g.n_vertices);
  for (auto [u, v] : g.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  Mask128 full;
  for (int i = 0; i < g.n_vertices; ++i) {
    if (i < 64) full.lo |= 1ULL << i;
    else full.hi |= 1ULL << (i - 64);
  }
  MatchingCounter mc{adj, {}};
  return mc.count(full);
}

StepSet::StepSet(std::vector<std::vector<long long>> steps) : steps_(std::move(steps)) {
  if (steps_.empty()) throw DomainError("StepSet: empty step set");
  dim_ = steps_[0].size();
  for (const auto& v : steps_)
    if ((int)v.size() != dim_) throw DomainError("StepSet: inconsistent dimensions");
  // perceptron search for u with u.v > 0 for all steps; converges iff the
  // steps lie in an open half-space
  std::vector<BigRat> u(dim_, 0);
  for (const auto& v : steps_)
    for (int d = 0; d < dim_; ++d) u[d] += v[d];
  for (int iter = 0; iter < 10000; ++iter) {
    bool ok = true;
    for (const auto& v : steps_) {
      BigRat dot = 0;
      for (int d = 0; d < dim_; ++d) dot += u[d] * v[d];
      if (dot <= 0) {
        ok = false;
        for (int d = 0; d < dim_; ++d) u[d] += v[d];
      }
    }
    if (ok) {
      certificate_ = std::move(u);
      return;
    }
  }
  throw DomainError("StepSet: no positivity certificate (steps do not span a half-space)");
}

long long StepSet::max_length(const std::vector<long long>& w) const {
  BigRat uw = 0;
  for (int d = 0; d < dim_; ++d) uw += certificate_[d] * w[d];
  if (uw < 0) return -1;
  BigRat min_step = 0;
  bool first = true;
  for (const auto& v : steps_) {
    BigRat dot = 0;
    for (int d = 0; d < dim_; ++d) dot += certificate_[d] * v[d];
    if (first || dot < min_step) min_step = dot;
    first = false;
  }
  return (uw / min_step).convert_to<long long>() + 1;
}

namespace {

using Point = std::vector<long long>;

Point subtract(const Point& a, const Point& b) {
  Point r(a.size());
  for (size_t d = 0; d < a.size(); ++d) r[d] = a[d] - b[d];
  return r;
}

}  // namespace

BigInt count_paths_dp(const StepSet& s, const std::vector<long long>& w) {
  if ((int)w.size() != s.dimension()) throw DomainError("count_paths_dp: dimension mismatch");
  // backward DP from w; u-score strictly decreases along each recursion
  std::map<Point, BigInt> memo;
  const Point origin(w.size(), 0);
  auto u_score = [&](const Point& p) {
    BigRat v = 0;
    for (int d = 0; d < s.dimension(); ++d) v += s.certificate()[d] * p[d];
    return v;
  };
  std::function<BigInt(const Point&)> rec = [&](const Point& p) -> BigInt {
    if (p == origin) return 1;
    if (u_score(p) <= 0) return 0;
    auto it = memo.find(p);
    if (it != memo.end()) return it->second;
    BigInt total = 0;
    for (const auto& v : s.steps()) total += rec(subtract(p, v));
    memo.emplace(p, total);
    return total;
  };
  return rec(w);
}

DeviationResult deviation_fraction(const StepSet& s, const std::vector<long long>& w,
                                   const BigRat& eps) {
  if (eps <= 0) throw DomainError("deviation_fraction: eps must be positive");
  if ((int)w.size() != s.dimension()) throw DomainError("deviation_fraction: dimension mismatch");
  const int m = s.dimension();
  const long long n_max = std::max<long long>(s.max_length(w), 0);
  const BigInt eps_num = numerator(eps), eps_den = denominator(eps);
  BigRat score_lo = 0, score_hi = 0;
  bool first_score = true;
  for (const auto& sv : s.steps()) {
    BigRat dot = 0;
    for (int d = 0; d < m; ++d) dot += s.certificate()[d] * sv[d];
    if (first_score) score_lo = score_hi = dot;
    score_lo = std::min(score_lo, dot);
    score_hi = std::max(score_hi, dot);
    first_score = false;
  }

  DeviationResult out{0, 0};
  for (long long n = 1; n <= n_max; ++n) {
    // layer DP over positions after i steps; tracked twice, all paths and
    // tube-bound paths
    std::map<Point, std::pair<BigInt, BigInt>> layer;
    layer[Point(m, 0)] = {1, 1};
    for (long long i = 1; i <= n && !layer.empty(); ++i) {
      std::map<Point, std::pair<BigInt, BigInt>> next;
      for (const auto& [p, cnt] : layer) {
        for (const auto& v : s.steps()) {
          Point q(m);
          for (int d = 0; d < m; ++d) q[d] = p[d] + v[d];
          // prune: the remainder w - q must be reachable in n - i steps
          Point rest(m);
          for (int d = 0; d < m; ++d) rest[d] = w[d] - q[d];
          BigRat u_rest = 0;
          for (int d = 0; d < m; ++d) u_rest += s.certificate()[d] * rest[d];
          if (u_rest < 0) continue;
          long long rem = n - i;
          if (rem == 0 && q != w) continue;
          if (u_rest < score_lo * rem || u_rest > score_hi * rem) continue;
          // tube test, exact: |q*n - i*w|^2 <= (eps n^2)^2 scaled by eps_den^2
          BigInt norm2 = 0;
          for (int d = 0; d < m; ++d) {
            BigInt diff = BigInt(q[d]) * n - BigInt(w[d]) * i;
            norm2 += diff * diff;
          }
          BigInt n2 = BigInt(n) * n;
          bool inside = eps_den * eps_den * norm2 <= eps_num * eps_num * n2 * n2;
          auto& slot = next[q];
          slot.first += cnt.first;
          if (inside) slot.second += cnt.second;
        }
      }
      layer = std::move(next);
    }
    auto it = layer.find(w);
    if (it != layer.end()) {
      out.total += it->second.first;
      out.deviating += it->second.first - it->second.second;
    }
  }
  if (out.total == 0) throw DomainError("deviation_fraction: endpoint unreachable");
  return out;
}

DecayFit deviation_decay_fit(const StepSet& s, const std::vector<long long>& direction,
                             const BigRat& eps, const std::vector<long long>& k_range) {
  DecayFit fit;
  double nrm = 0;
  for (long long d : direction) nrm += double(d) * double(d);
  nrm = std::sqrt(nrm);
  for (long long k : k_range) {
    Point w(direction.size());
    for (size_t d = 0; d < direction.size(); ++d) w[d] = k * direction[d];
    fit.rows.push_back({k, k * nrm, deviation_fraction(s, w, eps)});
  }
  // least-squares slope of -log f against |w|, zero fractions skipped
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int m = 0;
  for (const auto& r : fit.rows) {
    if (r.dev.deviating == 0) continue;
    double x = r.w_norm;
    double y = -log_bigrat(r.dev.fraction());
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++m;
  }
  if (m < 2) {
    fit.trivially_concentrated = true;
    return fit;
  }
  fit.c1 = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  return fit;
}

}  // namespace dentile
