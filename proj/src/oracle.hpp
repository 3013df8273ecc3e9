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

#ifndef DENTILE_ORACLE_HPP
#define DENTILE_ORACLE_HPP

#include <vector>

#include "numeric.hpp"
#include "regions.hpp"

namespace dentile {

// Exact perfect-matching count by recursive elimination, branching on a
// lowest-degree vertex. Ground truth for every closed-form count in the
// library; intended for graphs of up to 128 vertices.
BigInt count_matchings(const DualGraph& g);

// Finite step set in Z^m together with a certificate vector u, u.v > 0 for
// every step v, which bounds the length of any path to a fixed endpoint.
class StepSet {
 public:
  // Finds and validates a certificate (perceptron iteration). Throws if the
  // steps do not span an open half-space.
  explicit StepSet(std::vector<std::vector<long long>> steps);

  const std::vector<std::vector<long long>>& steps() const { return steps_; }
  const std::vector<BigRat>& certificate() const { return certificate_; }
  int dimension() const { return dim_; }

  // Upper bound on the length of any path from the origin to w.
  long long max_length(const std::vector<long long>& w) const;

 private:
  std::vector<std::vector<long long>> steps_;
  std::vector<BigRat> certificate_;
  int dim_ = 0;
};

// Number of paths from the origin to w over all lengths (0 if unreachable).
BigInt count_paths_dp(const StepSet& s, const std::vector<long long>& w);

struct DeviationResult {
  BigInt deviating;  // paths with some index i where |w_i - i w/N| > eps N
  BigInt total;
  BigRat fraction() const {
    if (total == 0) throw DomainError("deviation_fraction: endpoint unreachable");
    return BigRat(deviating, total);
  }
};

// Exact fraction of paths to w that leave the eps-tube around the straight
// segment: per path length N, an index i counts as a deviation when
// |w_i - i w / N| > eps N, compared exactly via squared norms.
DeviationResult deviation_fraction(const StepSet& s, const std::vector<long long>& w,
                                   const BigRat& eps);

struct DecayFit {
  struct Row {
    long long k;
    double w_norm;
    DeviationResult dev;
  };
  std::vector<Row> rows;
  bool trivially_concentrated = false;  // every fraction zero; slope undefined
  double c1 = 0.0;                      // least-squares slope of -log f vs |w|
};

DecayFit deviation_decay_fit(const StepSet& s, const std::vector<long long>& direction,
                             const BigRat& eps, const std::vector<long long>& k_range);

}  // namespace dentile

#endif  // DENTILE_ORACLE_HPP
