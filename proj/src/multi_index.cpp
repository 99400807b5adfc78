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

#include "hgm/multi_index.hpp"

namespace hgm {

namespace {

void extend(MultiIndex& prefix, std::size_t pos, std::uint64_t budget, std::vector<MultiIndex>& out) {
  if (pos == prefix.size()) {
    out.push_back(prefix);
    return;
  }
  for (std::uint64_t v = 0; v <= budget; ++v) {
    prefix[pos] = v;
    extend(prefix, pos + 1, budget - v, out);
  }
  prefix[pos] = 0;
}

}  // namespace

std::vector<MultiIndex> indices_up_to_order(std::size_t d, std::uint64_t max_order) {
  std::vector<MultiIndex> out;
  MultiIndex prefix = MultiIndex::zeros(d);
  extend(prefix, 0, max_order, out);
  return out;
}

}  // namespace hgm
