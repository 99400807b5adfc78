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

#include "hgm/moments.hpp"

#include "hgm/combinatorics.hpp"

namespace hgm {

namespace {

// n^(m) / N^(m), or 0 when m > n.
ExactRational sampling_ratio(std::uint64_t population, std::uint64_t sample_size, std::uint64_t order) {
  if (order > sample_size) {
    return 0;
  }
  return make_rational(falling_factorial(to_exact(sample_size), order),
                       falling_factorial(to_exact(population), order));
}

// n / N, with 0 for the empty population.
ExactRational sampling_fraction(const DistributionParams& params) {
  if (params.population() == 0) {
    return 0;
  }
  return make_rational(to_exact(params.sample_size()), to_exact(params.population()));
}

ExactInteger pow_int(const ExactInteger& base, std::uint64_t exp) {
  ExactInteger r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp));
  return r;
}

ExactRational pow_rat(const ExactRational& base, std::uint64_t exp) {
  ExactInteger num;
  ExactInteger den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exp));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exp));
  return make_rational(num, den);
}

void require_positive_probs(const ProbabilityVector& probs) {
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (sgn(probs[i]) <= 0) {
      throw InvalidParams("category " + std::to_string(i + 1) +
                          " has zero count; the correction factor divides by p_" + std::to_string(i + 1));
    }
  }
}

void check_probs_dimension(const ProbabilityVector& probs, const MultiIndex& index) {
  if (index.size() != probs.size()) {
    throw DimensionMismatch("exponent vector has dimension " + std::to_string(index.size()) + ", expected " +
                            std::to_string(probs.size()));
  }
}

ExactRational correction_from_probs(std::uint64_t population, const ProbabilityVector& probs, const MultiIndex& k) {
  const std::uint64_t order = k.norm1();
  if (order > population) {
    return 0;
  }
  const ExactRational big_n(to_exact(population));
  ExactRational num = 1;
  ExactRational den(falling_factorial(to_exact(population), order));
  for (std::size_t i = 0; i < k.size(); ++i) {
    num *= falling_factorial(ExactRational(big_n * probs[i]), k[i]);
    den *= pow_rat(probs[i], k[i]);
  }
  return ExactRational(num / den);
}

ExactRational multinomial_term(std::uint64_t n, const ProbabilityVector& probs, const MultiIndex& k) {
  ExactRational r(falling_factorial(to_exact(n), k.norm1()));
  for (std::size_t i = 0; i < k.size(); ++i) {
    r *= pow_rat(probs[i], k[i]);
  }
  return r;
}

}  // namespace

ExactRational factorial_moment(const DistributionParams& params, const MultiIndex& alpha) {
  check_dimension(params, alpha, "exponent vector");
  ExactRational value = sampling_ratio(params.population(), params.sample_size(), alpha.norm1());
  for (std::size_t i = 0; i < alpha.size() && value != 0; ++i) {
    value *= falling_factorial(to_exact(params.count(i)), alpha[i]);
  }
  return value;
}

ExactRational noncentral_moment(const DistributionParams& params, const MultiIndex& alpha) {
  check_dimension(params, alpha, "exponent vector");
  ExactRational total = 0;
  for_each_in_box(alpha, [&](const MultiIndex& k) {
    ExactRational term = sampling_ratio(params.population(), params.sample_size(), k.norm1());
    for (std::size_t i = 0; i < k.size() && term != 0; ++i) {
      term *= stirling2(alpha[i], k[i]) * falling_factorial(to_exact(params.count(i)), k[i]);
    }
    total += term;
  });
  return total;
}

namespace detail {

ExactRational central_moment(const DistributionParams& params, const MultiIndex& alpha, CentralStirlingRow row) {
  check_dimension(params, alpha, "exponent vector");
  const ExactRational neg_fraction = -sampling_fraction(params);
  ExactRational total = 0;
  for_each_in_box(alpha, [&](const MultiIndex& ell) {
    const std::uint64_t shift = alpha.norm1() - ell.norm1();
    ExactRational outer = pow_rat(neg_fraction, shift);
    for (std::size_t i = 0; i < ell.size(); ++i) {
      outer *= binomial(alpha[i], static_cast<std::int64_t>(ell[i])) * pow_int(to_exact(params.count(i)), alpha[i] - ell[i]);
    }
    if (outer == 0) {
      return;
    }
    for_each_in_box(ell, [&](const MultiIndex& k) {
      ExactRational term = sampling_ratio(params.population(), params.sample_size(), k.norm1());
      for (std::size_t i = 0; i < k.size() && term != 0; ++i) {
        const std::uint64_t upper = row == CentralStirlingRow::kInner ? ell[i] : alpha[i];
        term *= stirling2(upper, k[i]) * falling_factorial(to_exact(params.count(i)), k[i]);
      }
      total += outer * term;
    });
  });
  return total;
}

}  // namespace detail

ExactRational central_moment(const DistributionParams& params, const MultiIndex& alpha) {
  return detail::central_moment(params, alpha, detail::CentralStirlingRow::kInner);
}

MomentResult compute_moment(const DistributionParams& params, const MultiIndex& alpha, MomentKind kind) {
  ExactRational value;
  switch (kind) {
    case MomentKind::Factorial:
      value = factorial_moment(params, alpha);
      break;
    case MomentKind::Noncentral:
      value = noncentral_moment(params, alpha);
      break;
    case MomentKind::Central:
      value = central_moment(params, alpha);
      break;
  }
  return MomentResult{params, alpha, kind, value};
}

std::vector<ExactRational> mean_vector(const DistributionParams& params) {
  const ExactRational fraction = sampling_fraction(params);
  std::vector<ExactRational> mean;
  mean.reserve(params.dimension());
  for (auto c : params.counts()) {
    mean.emplace_back(fraction * to_exact(c));
  }
  return mean;
}

std::vector<std::vector<ExactRational>> covariance_matrix(const DistributionParams& params) {
  const std::size_t d = params.dimension();
  std::vector<std::vector<ExactRational>> cov(d, std::vector<ExactRational>(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      MultiIndex alpha = MultiIndex::zeros(d);
      ++alpha[i];
      ++alpha[j];
      cov[i][j] = central_moment(params, alpha);
      cov[j][i] = cov[i][j];
    }
  }
  return cov;
}

ExactRational correction_factor(const DistributionParams& params, const MultiIndex& k) {
  check_dimension(params, k, "index");
  for (std::size_t i = 0; i < params.dimension(); ++i) {
    if (params.count(i) == 0) {
      throw InvalidParams("category " + std::to_string(i + 1) +
                          " has zero count; the correction factor divides by p_" + std::to_string(i + 1));
    }
  }
  return correction_from_probs(params.population(), params.probs(), k);
}

ExactRational multinomial_factorial_moment(std::uint64_t n, const ProbabilityVector& probs, const MultiIndex& alpha) {
  check_probs_dimension(probs, alpha);
  return multinomial_term(n, probs, alpha);
}

ExactRational multinomial_noncentral_moment(std::uint64_t n, const ProbabilityVector& probs, const MultiIndex& alpha) {
  check_probs_dimension(probs, alpha);
  ExactRational total = 0;
  for_each_in_box(alpha, [&](const MultiIndex& k) {
    ExactRational term = multinomial_term(n, probs, k);
    for (std::size_t i = 0; i < k.size() && term != 0; ++i) {
      term *= stirling2(alpha[i], k[i]);
    }
    total += term;
  });
  return total;
}

ExactRational noncentral_moment_from_probs(std::uint64_t population, std::uint64_t sample_size,
                                           const ProbabilityVector& probs, const MultiIndex& alpha) {
  params_from_probs(static_cast<std::int64_t>(population), static_cast<std::int64_t>(sample_size), probs);
  require_positive_probs(probs);
  check_probs_dimension(probs, alpha);
  ExactRational total = 0;
  for_each_in_box(alpha, [&](const MultiIndex& k) {
    ExactRational term = multinomial_term(sample_size, probs, k);
    for (std::size_t i = 0; i < k.size() && term != 0; ++i) {
      term *= stirling2(alpha[i], k[i]);
    }
    if (term != 0) {
      total += correction_from_probs(population, probs, k) * term;
    }
  });
  return total;
}

ExactRational central_moment_from_probs(std::uint64_t population, std::uint64_t sample_size,
                                        const ProbabilityVector& probs, const MultiIndex& alpha) {
  params_from_probs(static_cast<std::int64_t>(population), static_cast<std::int64_t>(sample_size), probs);
  require_positive_probs(probs);
  check_probs_dimension(probs, alpha);
  const ExactInteger neg_n = -to_exact(sample_size);
  ExactRational total = 0;
  for_each_in_box(alpha, [&](const MultiIndex& ell) {
    ExactRational outer(pow_int(neg_n, alpha.norm1() - ell.norm1()));
    for (std::size_t i = 0; i < ell.size(); ++i) {
      outer *= binomial(alpha[i], static_cast<std::int64_t>(ell[i])) * pow_rat(probs[i], alpha[i] - ell[i]);
    }
    if (outer == 0) {
      return;
    }
    for_each_in_box(ell, [&](const MultiIndex& k) {
      ExactRational term = multinomial_term(sample_size, probs, k);
      for (std::size_t i = 0; i < k.size() && term != 0; ++i) {
        term *= stirling2(ell[i], k[i]);
      }
      if (term != 0) {
        total += correction_from_probs(population, probs, k) * outer * term;
      }
    });
  });
  return total;
}

}  // namespace hgm
