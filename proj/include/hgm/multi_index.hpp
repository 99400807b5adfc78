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

#ifndef HGM_MULTI_INDEX_HPP
#define HGM_MULTI_INDEX_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <vector>

namespace hgm {

/// Vector of nonnegative integers: a support point k or an exponent vector
/// alpha. Only the first d categories are stored; the (d+1)-th is implied.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<std::uint64_t> entries) : entries_(std::move(entries)) {}
  MultiIndex(std::initializer_list<std::uint64_t> entries) : entries_(entries) {}

  static MultiIndex zeros(std::size_t d) { return MultiIndex(std::vector<std::uint64_t>(d, 0)); }
  static MultiIndex unit(std::size_t d, std::size_t i) {
    auto m = zeros(d);
    m.entries_.at(i) = 1;
    return m;
  }

  std::size_t size() const { return entries_.size(); }
  std::uint64_t operator[](std::size_t i) const { return entries_[i]; }
  std::uint64_t& operator[](std::size_t i) { return entries_[i]; }
  std::span<const std::uint64_t> entries() const { return entries_; }

  /// l1 norm.
  std::uint64_t norm1() const { return std::accumulate(entries_.begin(), entries_.end(), std::uint64_t{0}); }

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<std::uint64_t> entries_;
};

/// Calls fn(index) for every index with 0 <= index[i] <= upper[i], in
/// lexicographic order. An empty `upper` yields one call with the empty index.
template <typename Fn>
void for_each_in_box(const MultiIndex& upper, Fn&& fn) {
  MultiIndex idx = MultiIndex::zeros(upper.size());
  while (true) {
    fn(static_cast<const MultiIndex&>(idx));
    std::size_t pos = upper.size();
    while (pos > 0) {
      --pos;
      if (idx[pos] < upper[pos]) {
        ++idx[pos];
        break;
      }
      idx[pos] = 0;
      if (pos == 0) {
        return;
      }
    }
    if (upper.size() == 0) {
      return;
    }
  }
}

/// All d-dimensional multi-indices with norm1() <= max_order, lexicographic.
std::vector<MultiIndex> indices_up_to_order(std::size_t d, std::uint64_t max_order);

}  // namespace hgm

#endif  // HGM_MULTI_INDEX_HPP
