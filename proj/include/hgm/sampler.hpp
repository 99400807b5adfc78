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

// Monte Carlo draws from the multivariate hypergeometric distribution by
// literally sampling without replacement from an urn.
//
// Random numbers come from std::mt19937_64 seeded with the caller's seed.
// Bounded integers are drawn by rejection from the raw 64-bit output, so a
// given seed yields the same draws with every standard library.

#ifndef HGM_SAMPLER_HPP
#define HGM_SAMPLER_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "hgm/distribution.hpp"
#include "hgm/moment_kind.hpp"
#include "hgm/multi_index.hpp"

namespace hgm {

/// Category counts of one sample; the (d+1)-th count is n - norm1().
struct SampleDraw {
  MultiIndex counts_drawn;
};

/// Holds the population as a multiset of category labels and draws n of
/// them with a partial Fisher-Yates shuffle. Not safe for concurrent draws.
class UrnSampler {
 public:
  UrnSampler(const DistributionParams& params, std::uint64_t seed);

  SampleDraw draw();

 private:
  std::uint64_t uniform_below(std::uint64_t bound);

  std::size_t dimension_;
  std::uint64_t sample_size_;
  std::vector<std::size_t> urn_;
  std::mt19937_64 engine_;
};

/// One draw from a freshly seeded sampler.
SampleDraw sample(const DistributionParams& params, std::uint64_t seed);

struct MonteCarloEstimate {
  double mean = 0.0;
  /// Sample standard deviation over sqrt(num_samples); 0 for a single draw.
  double standard_error = 0.0;
  std::uint64_t num_samples = 0;
};

/// Averages g(k) over num_samples draws, g as in the brute-force oracle.
/// Central deviations use the exact mean n N_i / N. Throws
/// std::invalid_argument if num_samples == 0.
MonteCarloEstimate mc_moment_estimate(const DistributionParams& params, const MultiIndex& alpha, MomentKind kind,
                                      std::uint64_t num_samples, std::uint64_t seed);

}  // namespace hgm

#endif  // HGM_SAMPLER_HPP
