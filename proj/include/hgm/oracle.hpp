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

// Brute-force moments obtained by summing g(k) * pmf(k) over the whole
// support. Nothing here calls the closed-form moment formulas; the oracle
// only depends on the pmf and the combinatorial kernel.

#ifndef HGM_ORACLE_HPP
#define HGM_ORACLE_HPP

#include <vector>

#include "hgm/distribution.hpp"
#include "hgm/exact.hpp"
#include "hgm/moment_kind.hpp"
#include "hgm/multi_index.hpp"

namespace hgm {

/// Enumerates the support and pmf of one distribution once, then answers
/// any number of moment queries against it.
class BruteForceOracle {
 public:
  explicit BruteForceOracle(const DistributionParams& params);

  const DistributionParams& params() const { return params_; }
  const std::vector<MultiIndex>& support() const { return support_; }
  const std::vector<ExactRational>& probabilities() const { return probabilities_; }
  /// E[X_i], by enumeration.
  const std::vector<ExactRational>& mean() const { return mean_; }

  /// Sum over the support of g(k) pmf(k), with g = prod k_i^(a_i),
  /// prod k_i^a_i or prod (k_i - mean_i)^a_i according to kind.
  ExactRational moment(const MultiIndex& alpha, MomentKind kind) const;

 private:
  DistributionParams params_;
  std::vector<MultiIndex> support_;
  std::vector<ExactRational> probabilities_;
  std::vector<ExactRational> mean_;
};

ExactRational brute_force_moment(const DistributionParams& params, const MultiIndex& alpha, MomentKind kind);

}  // namespace hgm

#endif  // HGM_ORACLE_HPP
