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

#ifndef HGM_MOMENT_KIND_HPP
#define HGM_MOMENT_KIND_HPP

#include <optional>
#include <string_view>

namespace hgm {

enum class MomentKind { Factorial, Noncentral, Central };

inline constexpr MomentKind kAllMomentKinds[] = {MomentKind::Factorial, MomentKind::Noncentral, MomentKind::Central};

std::string_view to_string(MomentKind kind);
/// "factorial" | "noncentral" | "central".
std::optional<MomentKind> parse_moment_kind(std::string_view text);

}  // namespace hgm

#endif  // HGM_MOMENT_KIND_HPP
