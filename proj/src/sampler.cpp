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

#include "hgm/sampler.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace hgm {

UrnSampler::UrnSampler(const DistributionParams& params, std::uint64_t seed)
    : dimension_(params.dimension()), sample_size_(params.sample_size()), engine_(seed) {
  urn_.reserve(params.population());
  for (std::size_t i = 0; i < dimension_; ++i) {
    urn_.insert(urn_.end(), params.count(i), i);
  }
  urn_.insert(urn_.end(), params.implied_count(), dimension_);
}

std::uint64_t UrnSampler::uniform_below(std::uint64_t bound) {
  // Largest multiple of bound that fits; values at or above it are rejected.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

SampleDraw UrnSampler::draw() {
  MultiIndex drawn = MultiIndex::zeros(dimension_);
  const std::uint64_t size = urn_.size();
  for (std::uint64_t i = 0; i < sample_size_; ++i) {
    const std::uint64_t j = i + uniform_below(size - i);
    std::swap(urn_[i], urn_[j]);
    if (urn_[i] < dimension_) {
      ++drawn[urn_[i]];
    }
  }
  return SampleDraw{std::move(drawn)};
}

SampleDraw sample(const DistributionParams& params, std::uint64_t seed) { return UrnSampler(params, seed).draw(); }

MonteCarloEstimate mc_moment_estimate(const DistributionParams& params, const MultiIndex& alpha, MomentKind kind,
                                      std::uint64_t num_samples, std::uint64_t seed) {
  check_dimension(params, alpha, "exponent vector");
  if (num_samples == 0) {
    throw std::invalid_argument("num_samples must be >= 1");
  }
  std::vector<double> mean(params.dimension(), 0.0);
  if (params.population() > 0) {
    for (std::size_t i = 0; i < mean.size(); ++i) {
      mean[i] = static_cast<double>(params.sample_size()) * static_cast<double>(params.count(i)) /
                static_cast<double>(params.population());
    }
  }

  UrnSampler sampler(params, seed);
  // Welford running mean / variance.
  double running_mean = 0.0;
  double m2 = 0.0;
  for (std::uint64_t s = 1; s <= num_samples; ++s) {
    const MultiIndex k = sampler.draw().counts_drawn;
    double g = 1.0;
    for (std::size_t i = 0; i < k.size(); ++i) {
      const double ki = static_cast<double>(k[i]);
      switch (kind) {
        case MomentKind::Factorial:
          for (std::uint64_t p = 0; p < alpha[i]; ++p) {
            g *= ki - static_cast<double>(p);
          }
          break;
        case MomentKind::Noncentral:
          g *= std::pow(ki, static_cast<double>(alpha[i]));
          break;
        case MomentKind::Central:
          g *= std::pow(ki - mean[i], static_cast<double>(alpha[i]));
          break;
      }
    }
    const double delta = g - running_mean;
    running_mean += delta / static_cast<double>(s);
    m2 += delta * (g - running_mean);
  }

  MonteCarloEstimate est;
  est.mean = running_mean;
  est.num_samples = num_samples;
  if (num_samples > 1) {
    const double variance = m2 / static_cast<double>(num_samples - 1);
    est.standard_error = std::sqrt(variance / static_cast<double>(num_samples));
  }
  return est;
}

}  // namespace hgm
