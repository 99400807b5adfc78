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

#ifndef HGM_VERIFY_HPP
#define HGM_VERIFY_HPP

#include <functional>

#include "hgm/distribution.hpp"
#include "hgm/exact.hpp"
#include "hgm/moment_kind.hpp"
#include "hgm/multi_index.hpp"
#include "hgm/oracle.hpp"

namespace hgm {

/// A closed-form value checked against brute force. match is exact rational
/// equality; a mismatch is reported, never thrown.
struct OracleReport {
  DistributionParams params;
  MultiIndex alpha;
  MomentKind kind;
  ExactRational formula_value;
  ExactRational oracle_value;
  bool match;
};

using MomentFormula = std::function<ExactRational(const DistributionParams&, const MultiIndex&, MomentKind)>;

/// Checks compute_moment.
OracleReport verify(const DistributionParams& params, const MultiIndex& alpha, MomentKind kind);
OracleReport verify(const BruteForceOracle& oracle, const MultiIndex& alpha, MomentKind kind);

/// Checks an arbitrary formula; used to run altered formulas through the
/// same comparison.
OracleReport verify(const BruteForceOracle& oracle, const MultiIndex& alpha, MomentKind kind,
                    const MomentFormula& formula);

}  // namespace hgm

#endif  // HGM_VERIFY_HPP
