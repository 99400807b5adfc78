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

#include "hgm/oracle.hpp"

#include "hgm/combinatorics.hpp"

namespace hgm {

BruteForceOracle::BruteForceOracle(const DistributionParams& params)
    : params_(params), support_(enumerate_support(params)) {
  probabilities_.reserve(support_.size());
  mean_.assign(params_.dimension(), ExactRational(0));
  for (const auto& k : support_) {
    probabilities_.push_back(pmf(params_, k));
    for (std::size_t i = 0; i < k.size(); ++i) {
      mean_[i] += probabilities_.back() * to_exact(k[i]);
    }
  }
}

ExactRational BruteForceOracle::moment(const MultiIndex& alpha, MomentKind kind) const {
  check_dimension(params_, alpha, "exponent vector");
  ExactRational total = 0;
  for (std::size_t s = 0; s < support_.size(); ++s) {
    const MultiIndex& k = support_[s];
    ExactRational g = 1;
    for (std::size_t i = 0; i < k.size() && g != 0; ++i) {
      const ExactInteger ki = to_exact(k[i]);
      switch (kind) {
        case MomentKind::Factorial:
          g *= falling_factorial(ki, alpha[i]);
          break;
        case MomentKind::Noncentral:
          for (std::uint64_t p = 0; p < alpha[i]; ++p) {
            g *= ki;
          }
          break;
        case MomentKind::Central: {
          const ExactRational deviation = ki - mean_[i];
          for (std::uint64_t p = 0; p < alpha[i]; ++p) {
            g *= deviation;
          }
          break;
        }
      }
    }
    total += g * probabilities_[s];
  }
  return total;
}

ExactRational brute_force_moment(const DistributionParams& params, const MultiIndex& alpha, MomentKind kind) {
  return BruteForceOracle(params).moment(alpha, kind);
}

}  // namespace hgm
