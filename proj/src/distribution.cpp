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

#include "hgm/distribution.hpp"

#include <algorithm>

#include "hgm/combinatorics.hpp"

namespace hgm {

ProbabilityVector::ProbabilityVector(std::vector<ExactRational> probs) : probs_(std::move(probs)) {
  ExactRational total = 0;
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    probs_[i].canonicalize();
    if (sgn(probs_[i]) < 0) {
      throw InvalidParams("probability p_" + std::to_string(i + 1) + " is negative");
    }
    total += probs_[i];
  }
  if (total > 1) {
    throw InvalidParams("probabilities sum to more than 1");
  }
}

ExactRational ProbabilityVector::remainder() const {
  ExactRational r = 1;
  for (const auto& p : probs_) {
    r -= p;
  }
  return r;
}

DistributionParams::DistributionParams(std::uint64_t population, std::uint64_t sample_size,
                                       std::vector<std::uint64_t> counts)
    : population_(population), sample_size_(sample_size), counts_(std::move(counts)) {
  std::uint64_t total = 0;
  for (auto c : counts_) {
    total += c;
  }
  implied_count_ = population_ - total;
}

ProbabilityVector DistributionParams::probs() const {
  if (population_ == 0) {
    throw InvalidParams("proportions are undefined for an empty population");
  }
  std::vector<ExactRational> p;
  p.reserve(counts_.size());
  for (auto c : counts_) {
    p.push_back(make_rational(to_exact(c), to_exact(population_)));
  }
  return ProbabilityVector(std::move(p));
}

DistributionParams params_from_counts(std::int64_t population, std::int64_t sample_size,
                                      std::span<const std::int64_t> counts) {
  if (counts.empty()) {
    throw InvalidParams("dimension must be >= 1");
  }
  if (population < 0) {
    throw InvalidParams("population N is negative");
  }
  if (sample_size < 0) {
    throw InvalidParams("sample size n is negative");
  }
  if (sample_size > population) {
    throw InvalidParams("sample size exceeds population");
  }
  std::vector<std::uint64_t> unsigned_counts;
  unsigned_counts.reserve(counts.size());
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] < 0) {
      throw InvalidParams("subpopulation count N_" + std::to_string(i + 1) + " is negative");
    }
    const auto c = static_cast<std::uint64_t>(counts[i]);
    if (c > static_cast<std::uint64_t>(population) - total) {
      throw InvalidParams("subpopulation counts exceed population");
    }
    total += c;
    unsigned_counts.push_back(c);
  }
  return DistributionParams(static_cast<std::uint64_t>(population), static_cast<std::uint64_t>(sample_size),
                            std::move(unsigned_counts));
}

DistributionParams params_from_probs(std::int64_t population, std::int64_t sample_size,
                                     const ProbabilityVector& probs) {
  if (probs.size() == 0) {
    throw InvalidParams("dimension must be >= 1");
  }
  if (population < 0) {
    throw InvalidParams("population N is negative");
  }
  std::vector<std::int64_t> counts;
  counts.reserve(probs.size());
  for (std::size_t i = 0; i < probs.size(); ++i) {
    const ExactRational scaled = probs[i] * ExactRational(to_exact(static_cast<std::uint64_t>(population)));
    if (scaled.get_den() != 1) {
      throw NonIntegralCount("N*p_" + std::to_string(i + 1) + " = " + to_exact_string(scaled) +
                             " is non-integral");
    }
    counts.push_back(static_cast<std::int64_t>(scaled.get_num().get_si()));
  }
  return params_from_counts(population, sample_size, counts);
}

void check_dimension(const DistributionParams& params, const MultiIndex& index, const char* what) {
  if (index.size() != params.dimension()) {
    throw DimensionMismatch(std::string(what) + " has dimension " + std::to_string(index.size()) +
                            ", expected " + std::to_string(params.dimension()));
  }
}

std::vector<MultiIndex> enumerate_support(const DistributionParams& params) {
  const std::uint64_t n = params.sample_size();
  MultiIndex upper = MultiIndex::zeros(params.dimension());
  for (std::size_t i = 0; i < params.dimension(); ++i) {
    upper[i] = std::min(params.count(i), n);
  }
  std::vector<MultiIndex> support;
  for_each_in_box(upper, [&](const MultiIndex& k) {
    const std::uint64_t used = k.norm1();
    if (used <= n && n - used <= params.implied_count()) {
      support.push_back(k);
    }
  });
  return support;
}

ExactRational pmf(const DistributionParams& params, const MultiIndex& k) {
  check_dimension(params, k, "support point");
  const std::uint64_t used = k.norm1();
  if (used > params.sample_size()) {
    return 0;
  }
  ExactInteger weight = binomial(params.implied_count(), static_cast<std::int64_t>(params.sample_size() - used));
  for (std::size_t i = 0; i < k.size() && weight != 0; ++i) {
    weight *= binomial(params.count(i), static_cast<std::int64_t>(k[i]));
  }
  return make_rational(weight, binomial(params.population(), static_cast<std::int64_t>(params.sample_size())));
}

}  // namespace hgm
