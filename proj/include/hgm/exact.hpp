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

#ifndef HGM_EXACT_HPP
#define HGM_EXACT_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hgm {

/// Unbounded signed integer.
using ExactInteger = mpz_class;

/// Unbounded rational. Values produced by this library are always
/// canonical: lowest terms, positive denominator.
using ExactRational = mpq_class;

/// Builds num/den in canonical form. Throws std::domain_error if den == 0.
ExactRational make_rational(const ExactInteger& num, const ExactInteger& den);

inline ExactInteger to_exact(std::uint64_t v) { return ExactInteger(static_cast<unsigned long>(v)); }

/// "num/den", or just "num" when the denominator is 1.
std::string to_exact_string(const ExactRational& q);

/// Parses "a", "-a" or "a/b" (decimal digits only, b != 0) into a canonical
/// rational. Throws std::invalid_argument on anything else.
ExactRational parse_rational(std::string_view text);

/// Fixed-point rendering with `digits` fractional digits, rounded half to
/// even. digits == 0 yields an integer string with no decimal point.
std::string to_decimal_string(const ExactRational& q, unsigned digits);

}  // namespace hgm

#endif  // HGM_EXACT_HPP
