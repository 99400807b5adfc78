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

// Closed-form moments of the multivariate hypergeometric distribution.
//
// Let m = |k| and write r(m) = n^(m) / N^(m) for the ratio of falling
// factorials. Then
//
//   E[prod X_i^(a_i)]            = r(|a|) prod N_i^(a_i)
//   E[prod X_i^a_i]              = sum_{k <= a} r(|k|) prod S(a_i, k_i) N_i^(k_i)
//   E[prod (X_i - E X_i)^a_i]    = sum_{l <= a} sum_{k <= l} r(|k|) (-n/N)^{|a - l|}
//                                    prod C(a_i, l_i) S(l_i, k_i) N_i^{a_i - l_i} N_i^(k_i)
//
// where S is the Stirling number of the second kind. Exponent vectors are
// not restricted to the support: out-of-range falling factorials vanish term
// by term, and r(m) is taken as 0 whenever m > n (this also covers the 0/0
// that appears when m > N).

#ifndef HGM_MOMENTS_HPP
#define HGM_MOMENTS_HPP

#include <cstdint>
#include <vector>

#include "hgm/distribution.hpp"
#include "hgm/exact.hpp"
#include "hgm/moment_kind.hpp"
#include "hgm/multi_index.hpp"

namespace hgm {

struct MomentResult {
  DistributionParams params;
  MultiIndex alpha;
  MomentKind kind;
  ExactRational value;
};

ExactRational factorial_moment(const DistributionParams& params, const MultiIndex& alpha);
ExactRational noncentral_moment(const DistributionParams& params, const MultiIndex& alpha);
ExactRational central_moment(const DistributionParams& params, const MultiIndex& alpha);

/// Dispatches on kind.
MomentResult compute_moment(const DistributionParams& params, const MultiIndex& alpha, MomentKind kind);

/// E[X_i] = n N_i / N (all zeros when N = 0).
std::vector<ExactRational> mean_vector(const DistributionParams& params);

/// Entry (i, j) is the central moment with alpha = e_i + e_j.
std::vector<std::vector<ExactRational>> covariance_matrix(const DistributionParams& params);

/// Finite-population correction prod (N p_i)^(k_i) / (N^(|k|) prod p_i^k_i).
/// Requires every p_i > 0; it is 0 when |k| > N because the numerator
/// vanishes there. Throws InvalidParams on a zero-count category.
ExactRational correction_factor(const DistributionParams& params, const MultiIndex& k);

/// n^(|a|) prod p_i^a_i: the with-replacement (multinomial) factorial moment.
ExactRational multinomial_factorial_moment(std::uint64_t n, const ProbabilityVector& probs, const MultiIndex& alpha);

/// sum_{k <= a} n^(|k|) prod S(a_i, k_i) p_i^k_i: the multinomial
/// noncentral moment.
ExactRational multinomial_noncentral_moment(std::uint64_t n, const ProbabilityVector& probs, const MultiIndex& alpha);

// The same moments written in the (N, n, p) parametrization, as a product of
// the finite-population correction and a multinomial term. (N, p) must give
// integral counts and every p_i must be positive.
ExactRational noncentral_moment_from_probs(std::uint64_t population, std::uint64_t sample_size,
                                           const ProbabilityVector& probs, const MultiIndex& alpha);
ExactRational central_moment_from_probs(std::uint64_t population, std::uint64_t sample_size,
                                        const ProbabilityVector& probs, const MultiIndex& alpha);

namespace detail {

/// Which exponent indexes the Stirling factor in the central-moment inner
/// sum. kInner (S(l_i, k_i)) is the correct one; kOuter (S(a_i, k_i)) exists
/// only so tests can show the oracle rejects it.
enum class CentralStirlingRow { kInner, kOuter };

ExactRational central_moment(const DistributionParams& params, const MultiIndex& alpha, CentralStirlingRow row);

}  // namespace detail

}  // namespace hgm

#endif  // HGM_MOMENTS_HPP
