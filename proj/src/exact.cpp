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

#include "hgm/exact.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace hgm {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

ExactRational make_rational(const ExactInteger& num, const ExactInteger& den) {
  if (den == 0) {
    throw std::domain_error("rational with zero denominator");
  }
  ExactRational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_exact_string(const ExactRational& q) {
  // mpq_class::get_str already omits "/1".
  return q.get_str(10);
}

ExactRational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num_part = body.substr(0, slash);
  const std::string_view den_part = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num_part) || !all_digits(den_part)) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  ExactInteger num(std::string(num_part), 10);
  ExactInteger den(std::string(den_part), 10);
  if (den == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  if (negative) {
    num = -num;
  }
  return make_rational(num, den);
}

std::string to_decimal_string(const ExactRational& q, unsigned digits) {
  ExactInteger scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);

  const bool negative = sgn(q) < 0;
  const ExactInteger num = abs(q.get_num()) * scale;
  const ExactInteger& den = q.get_den();

  ExactInteger quot;
  ExactInteger rem;
  mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  const int cmp_half = cmp(ExactInteger(2 * rem), den);
  if (cmp_half > 0 || (cmp_half == 0 && mpz_odd_p(quot.get_mpz_t()) != 0)) {
    ++quot;
  }

  std::string s = quot.get_str(10);
  if (digits > 0) {
    if (s.size() <= digits) {
      s.insert(0, digits + 1 - s.size(), '0');
    }
    s.insert(s.size() - digits, 1, '.');
  }
  if (negative && quot != 0) {
    s.insert(0, 1, '-');
  }
  return s;
}

}  // namespace hgm
