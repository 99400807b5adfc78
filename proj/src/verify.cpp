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

#include "hgm/verify.hpp"

#include "hgm/moments.hpp"

namespace hgm {

OracleReport verify(const BruteForceOracle& oracle, const MultiIndex& alpha, MomentKind kind,
                    const MomentFormula& formula) {
  ExactRational formula_value = formula(oracle.params(), alpha, kind);
  ExactRational oracle_value = oracle.moment(alpha, kind);
  const bool match = formula_value == oracle_value;
  return OracleReport{oracle.params(), alpha, kind, std::move(formula_value), std::move(oracle_value), match};
}

OracleReport verify(const BruteForceOracle& oracle, const MultiIndex& alpha, MomentKind kind) {
  return verify(oracle, alpha, kind, [](const DistributionParams& p, const MultiIndex& a, MomentKind k) {
    return compute_moment(p, a, k).value;
  });
}

OracleReport verify(const DistributionParams& params, const MultiIndex& alpha, MomentKind kind) {
  return verify(BruteForceOracle(params), alpha, kind);
}

}  // namespace hgm
