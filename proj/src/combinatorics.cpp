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

#include "hgm/combinatorics.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>

namespace hgm {

ExactInteger falling_factorial(const ExactInteger& x, std::uint64_t order) {
  ExactInteger result = 1;
  ExactInteger factor = x;
  for (std::uint64_t i = 0; i < order; ++i) {
    result *= factor;
    if (result == 0) {
      break;
    }
    --factor;
  }
  return result;
}

ExactRational falling_factorial(const ExactRational& x, std::uint64_t order) {
  ExactRational result = 1;
  ExactRational factor = x;
  for (std::uint64_t i = 0; i < order; ++i) {
    result *= factor;
    if (result == 0) {
      break;
    }
    factor -= 1;
  }
  return result;
}

ExactInteger binomial(std::uint64_t a, std::int64_t b) {
  if (b < 0 || static_cast<std::uint64_t>(b) > a) {
    return 0;
  }
  ExactInteger result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return result;
}

namespace {

const ExactInteger kZero = 0;

std::vector<ExactInteger> next_stirling_row(const std::vector<ExactInteger>& prev) {
  const std::size_t n = prev.size();  // index of the new row
  std::vector<ExactInteger> row(n + 1);
  row[0] = 0;
  for (std::size_t k = 1; k < n; ++k) {
    row[k] = k * prev[k] + prev[k - 1];
  }
  row[n] = 1;
  return row;
}

// Rows live in a deque so references handed out under the shared lock stay
// valid while other threads append.
class SharedStirlingCache {
 public:
  SharedStirlingCache() { rows_.push_back({ExactInteger(1)}); }

  ExactInteger get(std::uint64_t n, std::uint64_t k) {
    if (k > n) {
      return 0;
    }
    {
      std::shared_lock lock(mutex_);
      if (n < rows_.size()) {
        return rows_[n][k];
      }
    }
    std::unique_lock lock(mutex_);
    while (rows_.size() <= n) {
      rows_.push_back(next_stirling_row(rows_.back()));
    }
    return rows_[n][k];
  }

 private:
  std::shared_mutex mutex_;
  std::deque<std::vector<ExactInteger>> rows_;
};

}  // namespace

StirlingTable::StirlingTable(std::uint64_t max_n) {
  rows_.reserve(max_n + 1);
  rows_.push_back({ExactInteger(1)});
  for (std::uint64_t n = 1; n <= max_n; ++n) {
    rows_.push_back(next_stirling_row(rows_.back()));
  }
}

const ExactInteger& StirlingTable::at(std::uint64_t n, std::uint64_t k) const {
  const auto& r = rows_.at(n);
  return k < r.size() ? r[k] : kZero;
}

StirlingTable build_stirling_table(std::uint64_t max_n) { return StirlingTable(max_n); }

ExactInteger stirling2(std::uint64_t n, std::uint64_t k) {
  static SharedStirlingCache cache;
  return cache.get(n, k);
}

}  // namespace hgm
