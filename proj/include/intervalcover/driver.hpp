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

#ifndef INTERVALCOVER_DRIVER_HPP_
#define INTERVALCOVER_DRIVER_HPP_

#include <cstdint>
#include <functional>
#include <vector>

#include "intervalcover/core.hpp"
#include "intervalcover/lspc.hpp"
#include "intervalcover/mountains.hpp"
#include "intervalcover/reductions.hpp"

namespace intervalcover {

/// Guarantee of the mountain-range pipeline: 3 (split) * 8 (LSPC build) * 16 (SLRA).
inline constexpr std::int64_t kRangeApproxFactor = 384;

/// Intermediate products of one range solve, exposed for auditing.
struct RangeSolveTrace {
  std::int64_t kappa = 0;
  LspcSolution lspc;
  PartialSolution derived;   // keyed by derived resource ids
  Cost derived_cost = Cost::infeasible();
  PartialSolution lifted;    // keyed by original resource ids
  Cost lifted_cost = Cost::infeasible();
};

/// Solves one mountain range for every kappa up to `max_kappa`, sharing the
/// split, the LSPC instance and the DP memo across kappa values.
class RangeSolver {
 public:
  RangeSolver(const MountainRange& range, const Instance& inst, std::int64_t max_kappa);

  /// Pipeline split -> LSPC -> SLRA DP -> lift to narrow/wide -> lift to original.
  CoverResult solve(std::int64_t kappa, RangeSolveTrace* trace = nullptr);

  const MountainRange& range() const { return range_; }
  const SplitResult& split() const { return split_; }
  const LspcReduction& reduction() const { return reduction_; }
  LspcSolver& lspc_solver() { return solver_; }

  /// The narrow/wide instance: original jobs with the derived resources.
  Instance derived_instance(std::int64_t kappa) const;

 private:
  const MountainRange& range_;
  const Instance& inst_;
  SplitResult split_;
  LspcReduction reduction_;
  LspcSolver solver_;
};

/// Feasible cover of >= kappa jobs of the range, cost <= 384 * OPT.
CoverResult range_solve(const MountainRange& range, const Instance& inst, std::int64_t kappa);

struct PartialResult {
  CoverResult result;
  std::size_t L = 0;                        // number of mountain ranges
  std::int64_t certified_factor = 0;        // 384 * max(1, L)
  std::vector<std::vector<Cost>> range_costs;  // [range][kappa]
  std::vector<std::vector<Cost>> combine;      // [q][kappa], q = 0..L
};

/// Called after every range solve with the solver and the trace it produced.
using RangeObserver = std::function<void(RangeSolver&, const RangeSolveTrace&)>;

/// Decompose, solve every (range, kappa), and combine with the knapsack DP
/// over ranges. Cost INFEASIBLE when k > n or no combination covers k jobs.
PartialResult solve_partial(const Instance& inst, const RangeObserver& observer = {});

/// Exact through the cost-preserving reduction to SMFC; result cost is the
/// prize-collecting total.
CoverResult solve_prize(const Instance& inst, std::size_t max_s_types = kDefaultMaxSTypes);

}  // namespace intervalcover

#endif  // INTERVALCOVER_DRIVER_HPP_
