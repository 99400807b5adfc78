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

#include <random>

#include <gtest/gtest.h>

#include "hgm/moments.hpp"
#include "hgm/verify.hpp"
#include "test_support.hpp"

namespace hgm {
namespace {

const DistributionParams kSmall = params_from_counts(6, 3, {3, 2});

TEST(BruteForceMoment, Examples) {
  EXPECT_EQ(brute_force_moment(kSmall, {0, 0}, MomentKind::Noncentral), 1);
  EXPECT_EQ(brute_force_moment(kSmall, {1, 1}, MomentKind::Noncentral), make_rational(6, 5));
  EXPECT_EQ(brute_force_moment(kSmall, {1, 1}, MomentKind::Factorial), make_rational(6, 5));
  EXPECT_EQ(brute_force_moment(kSmall, {2, 0}, MomentKind::Noncentral), make_rational(27, 10));
  EXPECT_EQ(brute_force_moment(kSmall, {2, 0}, MomentKind::Central), make_rational(9, 20));
  EXPECT_EQ(brute_force_moment(kSmall, {1, 1}, MomentKind::Central), make_rational(-3, 10));
  EXPECT_EQ(brute_force_moment(kSmall, {1, 0}, MomentKind::Central), 0);
  EXPECT_EQ(brute_force_moment(kSmall, {0, 1}, MomentKind::Central), 0);
  EXPECT_THROW(brute_force_moment(kSmall, {0, 1, 0}, MomentKind::Central), DimensionMismatch);
}

TEST(BruteForceOracle, NormalizationAndMean) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const auto params = testing::random_params(rng, 3, 12);
    const BruteForceOracle oracle(params);
    EXPECT_EQ(oracle.moment(MultiIndex::zeros(params.dimension()), MomentKind::Noncentral), 1);
    for (std::size_t i = 0; i < params.dimension(); ++i) {
      // n N_i / N, computed here without the moment engine.
      const ExactRational expected =
          params.population() == 0 ? ExactRational(0)
                                   : make_rational(to_exact(params.sample_size() * params.count(i)),
                                                   to_exact(params.population()));
      EXPECT_EQ(oracle.mean()[i], expected);
    }
  }
}

TEST(Verify, MatchesOnRandomInputs) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 200; ++trial) {
    const auto params = testing::random_params(rng, 3, 10);
    const BruteForceOracle oracle(params);
    const auto alpha = testing::random_alpha(rng, params.dimension(), 3);
    for (auto kind : kAllMomentKinds) {
      const auto report = verify(oracle, alpha, kind);
      EXPECT_TRUE(report.match) << to_string(kind);
      EXPECT_EQ(report.formula_value, report.oracle_value);
    }
  }
}

TEST(Verify, ExponentsOutsideSupportStillMatch) {
  // alpha_1 = 3 > N_1 = 1, and |alpha| = 5 > n = 2.
  const auto params = params_from_counts(5, 2, {1, 2});
  for (auto kind : kAllMomentKinds) {
    const auto report = verify(params, {3, 2}, kind);
    EXPECT_TRUE(report.match) << to_string(kind) << " " << report.formula_value << " vs " << report.oracle_value;
  }
}

TEST(Verify, ReportsMismatchAsData) {
  const BruteForceOracle oracle(kSmall);
  const auto report = verify(oracle, {1, 1}, MomentKind::Noncentral,
                             [](const DistributionParams&, const MultiIndex&, MomentKind) { return ExactRational(1); });
  EXPECT_FALSE(report.match);
  EXPECT_EQ(report.formula_value, 1);
  EXPECT_EQ(report.oracle_value, make_rational(6, 5));
  EXPECT_EQ(report.alpha, (MultiIndex{1, 1}));
  EXPECT_EQ(report.kind, MomentKind::Noncentral);
}

TEST(Verify, OuterStirlingRowIsRejected) {
  const MomentFormula outer_row = [](const DistributionParams& p, const MultiIndex& a, MomentKind) {
    return detail::central_moment(p, a, detail::CentralStirlingRow::kOuter);
  };
  // Variance of X_1: the altered inner sum picks up S(2, k) in the l = 1 terms.
  const auto report = verify(BruteForceOracle(kSmall), {2, 0}, MomentKind::Central, outer_row);
  EXPECT_FALSE(report.match);
  EXPECT_EQ(report.oracle_value, make_rational(9, 20));
}

}  // namespace
}  // namespace hgm
