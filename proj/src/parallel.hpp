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

#ifndef DENTILE_PARALLEL_HPP
#define DENTILE_PARALLEL_HPP

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace dentile {

// Worker cap: DENTILE_THREADS when set, else hardware concurrency.
inline unsigned thread_budget() {
  if (const char* env = std::getenv("DENTILE_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

// Runs fn(i) for i in [0, count); work is pre-assigned so results are
// deterministic regardless of the number of workers.
template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
  unsigned workers = std::min<std::size_t>(thread_budget(), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) fn(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace dentile

#endif  // DENTILE_PARALLEL_HPP
