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

#ifndef HGM_DISTRIBUTION_HPP
#define HGM_DISTRIBUTION_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hgm/exact.hpp"
#include "hgm/multi_index.hpp"

namespace hgm {

/// Raised when (N, n, counts) or (N, n, probs) do not describe a finite
/// population. The message names the violated constraint.
class InvalidParams : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Some N * p_i is not an integer.
class NonIntegralCount : public InvalidParams {
 public:
  using InvalidParams::InvalidParams;
};

/// A multi-index whose dimension differs from the distribution's d.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// p_1..p_d with each p_i >= 0 and sum <= 1; p_{d+1} is implied.
class ProbabilityVector {
 public:
  /// Throws InvalidParams if any p_i < 0 or the sum exceeds 1.
  explicit ProbabilityVector(std::vector<ExactRational> probs);

  std::size_t size() const { return probs_.size(); }
  const ExactRational& operator[](std::size_t i) const { return probs_[i]; }
  std::span<const ExactRational> values() const { return probs_; }
  /// 1 - sum(p_i).
  ExactRational remainder() const;

 private:
  std::vector<ExactRational> probs_;
};

/// Validated parameters of Hypergeometric_d(N, n, counts): a population of
/// N units split into d explicit categories plus an implied last one.
class DistributionParams {
 public:
  std::uint64_t population() const { return population_; }
  std::uint64_t sample_size() const { return sample_size_; }
  std::size_t dimension() const { return counts_.size(); }
  std::span<const std::uint64_t> counts() const { return counts_; }
  std::uint64_t count(std::size_t i) const { return counts_[i]; }
  /// N_{d+1} = N - sum(counts).
  std::uint64_t implied_count() const { return implied_count_; }

  /// p_i = N_i / N. Requires N > 0.
  ProbabilityVector probs() const;

  friend bool operator==(const DistributionParams&, const DistributionParams&) = default;

 private:
  friend DistributionParams params_from_counts(std::int64_t, std::int64_t, std::span<const std::int64_t>);

  DistributionParams(std::uint64_t population, std::uint64_t sample_size, std::vector<std::uint64_t> counts);

  std::uint64_t population_ = 0;
  std::uint64_t sample_size_ = 0;
  std::vector<std::uint64_t> counts_;
  std::uint64_t implied_count_ = 0;
};

DistributionParams params_from_counts(std::int64_t population, std::int64_t sample_size,
                                      std::span<const std::int64_t> counts);

inline DistributionParams params_from_counts(std::int64_t population, std::int64_t sample_size,
                                             std::initializer_list<std::int64_t> counts) {
  return params_from_counts(population, sample_size, std::span<const std::int64_t>(counts.begin(), counts.size()));
}

/// Counts N * p_i; each must be an integer (NonIntegralCount otherwise).
DistributionParams params_from_probs(std::int64_t population, std::int64_t sample_size,
                                     const ProbabilityVector& probs);

/// Support points k in lexicographic order: 0 <= k_i <= N_i, |k| <= n and
/// n - |k| <= N_{d+1}.
std::vector<MultiIndex> enumerate_support(const DistributionParams& params);

/// binom(N, n)^-1 * prod_{i=1}^{d+1} binom(N_i, k_i), k_{d+1} = n - |k|.
/// Exactly 0 off the support. Throws DimensionMismatch.
ExactRational pmf(const DistributionParams& params, const MultiIndex& k);

/// Throws DimensionMismatch unless index.size() == params.dimension().
void check_dimension(const DistributionParams& params, const MultiIndex& index, const char* what);

}  // namespace hgm

#endif  // HGM_DISTRIBUTION_HPP
