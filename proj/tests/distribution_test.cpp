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
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace hgm {
namespace {

template <typename Fn>
std::string error_message(Fn&& fn) {
  try {
    fn();
  } catch (const InvalidParams& e) {
    return e.what();
  }
  return "<no error>";
}

TEST(ParamsFromCounts, ImpliedLastCategory) {
  const auto p = params_from_counts(6, 3, {3, 2});
  EXPECT_EQ(p.population(), 6u);
  EXPECT_EQ(p.sample_size(), 3u);
  EXPECT_EQ(p.dimension(), 2u);
  EXPECT_EQ(p.implied_count(), 1u);
}

TEST(ParamsFromCounts, RejectionsNameTheConstraint) {
  EXPECT_EQ(error_message([] { params_from_counts(6, 7, {3, 2}); }), "sample size exceeds population");
  EXPECT_EQ(error_message([] { params_from_counts(6, 3, {4, 3}); }), "subpopulation counts exceed population");
  EXPECT_EQ(error_message([] { params_from_counts(6, 3, {3, -1}); }), "subpopulation count N_2 is negative");
  EXPECT_EQ(error_message([] { params_from_counts(-1, 0, {0}); }), "population N is negative");
  EXPECT_EQ(error_message([] { params_from_counts(5, -2, {1}); }), "sample size n is negative");
  EXPECT_EQ(error_message([] { params_from_counts(5, 2, std::vector<std::int64_t>{}); }), "dimension must be >= 1");
}

TEST(ParamsFromCounts, EmptyPopulationIsValid) {
  const auto p = params_from_counts(0, 0, {0, 0});
  EXPECT_EQ(p.implied_count(), 0u);
  const auto support = enumerate_support(p);
  ASSERT_EQ(support.size(), 1u);
  EXPECT_EQ(support[0], (MultiIndex{0, 0}));
  EXPECT_EQ(pmf(p, MultiIndex{0, 0}), 1);
}

TEST(ParamsFromProbs, ExactScaling) {
  const ProbabilityVector probs({make_rational(1, 2), make_rational(1, 3)});
  EXPECT_EQ(params_from_probs(6, 3, probs), params_from_counts(6, 3, {3, 2}));
  EXPECT_EQ(probs.remainder(), make_rational(1, 6));
}

TEST(ParamsFromProbs, Rejections) {
  const ProbabilityVector thirds({make_rational(1, 3), make_rational(1, 3)});
  EXPECT_THROW(params_from_probs(10, 2, thirds), NonIntegralCount);
  EXPECT_NE(error_message([&] { params_from_probs(10, 2, thirds); }).find("non-integral"), std::string::npos);
  EXPECT_EQ(error_message([] { params_from_probs(10, 2, ProbabilityVector({})); }), "dimension must be >= 1");
  EXPECT_THROW(ProbabilityVector({make_rational(-1, 2)}), InvalidParams);
  EXPECT_THROW(ProbabilityVector({make_rational(2, 3), make_rational(1, 2)}), InvalidParams);
  EXPECT_NO_THROW(ProbabilityVector({make_rational(2, 3), make_rational(1, 3)}));
}

TEST(ParamsFromProbs, RoundTripThroughProportions) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto params = testing::random_params(rng, 4, 30);
    if (params.population() == 0) {
      continue;
    }
    EXPECT_EQ(params_from_probs(static_cast<std::int64_t>(params.population()),
                                static_cast<std::int64_t>(params.sample_size()), params.probs()),
              params);
  }
}

TEST(EnumerateSupport, Examples) {
  EXPECT_EQ(enumerate_support(params_from_counts(2, 1, {1})), (std::vector<MultiIndex>{{0}, {1}}));
  EXPECT_EQ(enumerate_support(params_from_counts(6, 3, {3, 2})),
            (std::vector<MultiIndex>{{0, 2}, {1, 1}, {1, 2}, {2, 0}, {2, 1}, {3, 0}}));
}

TEST(EnumerateSupport, WholePopulationSampled) {
  const auto support = enumerate_support(params_from_counts(9, 9, {2, 0, 4}));
  ASSERT_EQ(support.size(), 1u);
  EXPECT_EQ(support[0], (MultiIndex{2, 0, 4}));
}

TEST(EnumerateSupport, EmptySampleIsZeroVector) {
  const auto params = params_from_counts(7, 0, {3, 1, 2});
  const auto support = enumerate_support(params);
  ASSERT_EQ(support.size(), 1u);
  EXPECT_EQ(support[0], MultiIndex::zeros(3));
  EXPECT_EQ(pmf(params, support[0]), 1);
}

TEST(EnumerateSupport, MatchesUnprunedSearchAndIsSorted) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const auto params = testing::random_params(rng, 3, 12);
    const auto support = enumerate_support(params);
    EXPECT_EQ(support, testing::naive_support(params));
    EXPECT_TRUE(std::is_sorted(support.begin(), support.end()));
  }
}

TEST(Pmf, Examples) {
  EXPECT_EQ(pmf(params_from_counts(2, 1, {1}), MultiIndex{1}), make_rational(1, 2));
  const auto params = params_from_counts(6, 3, {3, 2});
  EXPECT_EQ(pmf(params, MultiIndex{1, 1}), make_rational(3, 10));
  EXPECT_EQ(pmf(params, MultiIndex{0, 0}), 0);
  EXPECT_EQ(pmf(params, MultiIndex{4, 0}), 0);
  EXPECT_EQ(pmf(params, MultiIndex{3, 2}), 0);
  EXPECT_THROW(pmf(params, MultiIndex{1}), DimensionMismatch);
}

TEST(Pmf, NormalizedAndPositiveExactlyOnSupport) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto params = testing::random_params(rng, 3, 12);
    const auto support = enumerate_support(params);
    ExactRational total = 0;
    for (const auto& k : support) {
      const auto p = pmf(params, k);
      EXPECT_GT(p, 0);
      total += p;
    }
    EXPECT_EQ(total, 1);

    MultiIndex upper = MultiIndex::zeros(params.dimension());
    for (std::size_t i = 0; i < upper.size(); ++i) {
      upper[i] = params.sample_size() + 1;
    }
    for_each_in_box(upper, [&](const MultiIndex& k) {
      const bool in_support = std::binary_search(support.begin(), support.end(), k);
      EXPECT_EQ(pmf(params, k) > 0, in_support);
    });
  }
}

TEST(Pmf, InvariantUnderRelabelingCategories) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const auto params = testing::random_params(rng, 3, 10);
    const std::size_t d = params.dimension();
    // Full vector of d + 1 counts, then a random permutation of all of them.
    std::vector<std::int64_t> full(params.counts().begin(), params.counts().end());
    full.push_back(static_cast<std::int64_t>(params.implied_count()));
    std::vector<std::size_t> perm(d + 1);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::int64_t> permuted_counts(d);
    for (std::size_t i = 0; i < d; ++i) {
      permuted_counts[i] = full[perm[i]];
    }
    const auto permuted = params_from_counts(static_cast<std::int64_t>(params.population()),
                                             static_cast<std::int64_t>(params.sample_size()), permuted_counts);
    for (const auto& k : enumerate_support(params)) {
      std::vector<std::uint64_t> full_k(k.entries().begin(), k.entries().end());
      full_k.push_back(params.sample_size() - k.norm1());
      MultiIndex permuted_k = MultiIndex::zeros(d);
      for (std::size_t i = 0; i < d; ++i) {
        permuted_k[i] = full_k[perm[i]];
      }
      EXPECT_EQ(pmf(params, k), pmf(permuted, permuted_k));
    }
  }
}

TEST(MultiIndex, IndicesUpToOrderAreLexicographicAndComplete) {
  const auto all = indices_up_to_order(2, 2);
  EXPECT_EQ(all, (std::vector<MultiIndex>{{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {2, 0}}));
  EXPECT_EQ(indices_up_to_order(3, 5).size(), 56u);  // C(8, 3)
  EXPECT_EQ(indices_up_to_order(1, 0), (std::vector<MultiIndex>{{0}}));
}

TEST(MultiIndex, BoxIterationCount) {
  int calls = 0;
  for_each_in_box(MultiIndex{2, 0, 3}, [&](const MultiIndex&) { ++calls; });
  EXPECT_EQ(calls, 12);
  calls = 0;
  for_each_in_box(MultiIndex{}, [&](const MultiIndex& m) {
    EXPECT_EQ(m.size(), 0u);
    ++calls;
  });
  EXPECT_EQ(calls, 1);
}

}  // namespace
}  // namespace hgm
