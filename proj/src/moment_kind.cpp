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

#include "hgm/moment_kind.hpp"

namespace hgm {

std::string_view to_string(MomentKind kind) {
  switch (kind) {
    case MomentKind::Factorial:
      return "factorial";
    case MomentKind::Noncentral:
      return "noncentral";
    case MomentKind::Central:
      return "central";
  }
  return "unknown";
}

std::optional<MomentKind> parse_moment_kind(std::string_view text) {
  for (auto kind : kAllMomentKinds) {
    if (text == to_string(kind)) {
      return kind;
    }
  }
  return std::nullopt;
}

}  // namespace hgm
