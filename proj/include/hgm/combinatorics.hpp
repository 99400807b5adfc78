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

#ifndef HGM_COMBINATORICS_HPP
#define HGM_COMBINATORICS_HPP

#include <cstdint>
#include <vector>

#include "hgm/exact.hpp"

namespace hgm {

/// x (x-1) ... (x-order+1); 1 when order == 0.
ExactInteger falling_factorial(const ExactInteger& x, std::uint64_t order);
ExactRational falling_factorial(const ExactRational& x, std::uint64_t order);

/// a!/(b!(a-b)!) inside the triangle, 0 outside it (b < 0 or b > a).
ExactInteger binomial(std::uint64_t a, std::int64_t b);

/// Immutable triangle of Stirling numbers of the second kind,
/// S(n, k) for 0 <= k <= n <= max_n.
class StirlingTable {
 public:
  explicit StirlingTable(std::uint64_t max_n);

  std::uint64_t max_n() const { return rows_.size() - 1; }

  /// S(n, k); 0 when k > n. Requires n <= max_n().
  const ExactInteger& at(std::uint64_t n, std::uint64_t k) const;

  /// Row n, entries k = 0..n.
  const std::vector<ExactInteger>& row(std::uint64_t n) const { return rows_.at(n); }

 private:
  std::vector<std::vector<ExactInteger>> rows_;
};

StirlingTable build_stirling_table(std::uint64_t max_n);

/// S(n, k) from a process-wide table that grows on demand. Safe to call
/// concurrently.
ExactInteger stirling2(std::uint64_t n, std::uint64_t k);

}  // namespace hgm

#endif  // HGM_COMBINATORICS_HPP
