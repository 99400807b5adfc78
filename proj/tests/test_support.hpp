// Copyright 2026 The hgmoments Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Test-only oracles and generators.

#ifndef HGM_TESTS_TEST_SUPPORT_HPP
#define HGM_TESTS_TEST_SUPPORT_HPP

#include <cstdint>
#include <algorithm>
#include <functional>
#include <random>
#include <vector>

#include "hgm/distribution.hpp"
#include "hgm/multi_index.hpp"

namespace hgm::testing {

/// Number of partitions of {1..n} into exactly k nonempty blocks, counted by
/// walking every restricted growth string of length n.
inline std::uint64_t count_set_partitions(unsigned n, unsigned k) {
  if (n == 0) {
    return k == 0 ? 1 : 0;
  }
  std::uint64_t found = 0;
  std::vector<unsigned> block(n, 0);
  std::function<void(unsigned, unsigned)> walk = [&](unsigned pos, unsigned used) {
    if (pos == n) {
      if (used == k) {
        ++found;
      }
      return;
    }
    for (unsigned b = 0; b <= used && b < k; ++b) {
      block[pos] = b;
      walk(pos + 1, b == used ? used + 1 : used);
    }
  };
  block[0] = 0;
  walk(1, 1);
  return k == 0 ? 0 : found;
}

/// Every k in [0, n]^d that satisfies the three support constraints, found
/// without any pruning.
inline std::vector<MultiIndex> naive_support(const DistributionParams& params) {
  const std::uint64_t n = params.sample_size();
  MultiIndex upper = MultiIndex::zeros(params.dimension());
  for (std::size_t i = 0; i < upper.size(); ++i) {
    upper[i] = n;
  }
  std::vector<MultiIndex> out;
  for_each_in_box(upper, [&](const MultiIndex& k) {
    bool ok = k.norm1() <= n && n - k.norm1() <= params.implied_count();
    for (std::size_t i = 0; i < k.size(); ++i) {
      ok = ok && k[i] <= params.count(i);
    }
    if (ok) {
      out.push_back(k);
    }
  });
  return out;
}

/// Random valid parameters with d in [1, max_d] and N in [0, max_population].
inline DistributionParams random_params(std::mt19937_64& rng, std::size_t max_d, std::int64_t max_population) {
  std::uniform_int_distribution<std::size_t> dim(1, max_d);
  std::uniform_int_distribution<std::int64_t> pop(0, max_population);
  const std::size_t d = dim(rng);
  const std::int64_t population = pop(rng);
  std::vector<std::int64_t> counts(d);
  std::int64_t left = population;
  for (auto& c : counts) {
    c = std::uniform_int_distribution<std::int64_t>(0, left)(rng);
    left -= c;
  }
  std::shuffle(counts.begin(), counts.end(), rng);
  const std::int64_t n = std::uniform_int_distribution<std::int64_t>(0, population)(rng);
  return params_from_counts(population, n, counts);
}

inline MultiIndex random_alpha(std::mt19937_64& rng, std::size_t d, std::uint64_t max_entry) {
  MultiIndex a = MultiIndex::zeros(d);
  for (std::size_t i = 0; i < d; ++i) {
    a[i] = std::uniform_int_distribution<std::uint64_t>(0, max_entry)(rng);
  }
  return a;
}

}  // namespace hgm::testing

#endif  // HGM_TESTS_TEST_SUPPORT_HPP
