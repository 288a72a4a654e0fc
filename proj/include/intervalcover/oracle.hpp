// Copyright 2026 The intervalcover Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exhaustive reference solvers. Each refuses with BudgetExceeded instead of
// truncating its enumeration.

#ifndef INTERVALCOVER_ORACLE_HPP_
#define INTERVALCOVER_ORACLE_HPP_

#include <cstdint>
#include <string_view>

#include "intervalcover/core.hpp"
#include "intervalcover/lspc.hpp"

namespace intervalcover {

struct OracleBudget {
  std::int64_t partial_jobs = 10;       // n for C(n, k) enumeration
  std::int64_t lspc_profiles = 100000;  // prod_t (d_t + 1)
  std::int64_t prize_jobs = 12;         // n for 2^n enumeration
  std::int64_t smfc_s_types = 16;       // S-type cap of the exact SMFC solver

  /// Parses "key=value" pairs separated by commas, e.g.
  /// "partial_jobs=12,lspc_profiles=200000". Keys not named keep their
  /// default. Throws InvalidInput on unknown keys or bad values.
  static OracleBudget parse(std::string_view text);

  /// Defaults overridden by INTERVALCOVER_BUDGET when it is set.
  static OracleBudget from_env();
};

/// Minimum over all k-subsets of jobs of the exact full cover of their profile.
CoverResult oracle_partial(const Instance& inst, const OracleBudget& budget = {});

/// Minimum over all coverage profiles and per-slot short picks of the short
/// cost plus the exact long-only cover of the residual.
LspcSolution oracle_lspc(const LspcInstance& inst, const OracleBudget& budget = {});

/// Minimum over all covered subsets of exact cover cost plus the penalties of
/// the jobs left out.
CoverResult oracle_prize(const Instance& inst, const OracleBudget& budget = {});

}  // namespace intervalcover

#endif  // INTERVALCOVER_ORACLE_HPP_
