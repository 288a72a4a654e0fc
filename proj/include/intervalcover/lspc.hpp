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

// Long Short Partial Cover.
//
// Each timeslot t carries a demand d_t. Short resources live on one timeslot
// and at most one may be picked per timeslot; long resources span a range and
// may be picked in any number of copies. A solution commits to a coverage
// profile k_t <= d_t with sum >= k, and the picked capacity at every t must
// reach k_t.
//
// LspcSolver computes the optimum single-long-resource-assignment (SLRA)
// solution: every timeslot's residual after its short is covered by the
// copies of one long resource alone. The optimum SLRA solution is within a
// factor 16 of the unrestricted optimum.
//
// The DP is over ([a,b], q, h): the cheapest way to cover measure q inside
// [a,b] when residuals up to h are already paid for by an enclosing long.
//
//   M = min(E1, E2, E3), with M = 0 when q = 0 or h = H
//   E1 = A([a,b], q, h)                                    shorts only
//   E2 = M([a,t], q1, h) + M([t+1,b], q - q1, h)           time cut
//   E3 = alpha c(i) + A(left, q1, h)
//        + M(span(i) clipped to [a,b], q2, min(H, alpha w(i)))
//        + A(right, q3, h)                                 alpha w(i) > h
//
// and the shorts-only table A splits q over the last slot via gamma.

#ifndef INTERVALCOVER_LSPC_HPP_
#define INTERVALCOVER_LSPC_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "intervalcover/core.hpp"

namespace intervalcover {

struct ShortResource {
  int id = 0;
  Timeslot t = 1;
  std::int64_t w = 1;
  std::int64_t c = 0;
};

struct LongResource {
  int id = 0;
  Timeslot s = 1;
  Timeslot e = 1;
  std::int64_t w = 1;
  std::int64_t c = 0;
};

struct LspcInstance {
  Timeslot T = 1;
  std::vector<std::int64_t> demand;  // demand[t - 1] = d_t
  std::vector<ShortResource> shorts;
  std::vector<LongResource> longs;
  std::int64_t k = 0;

  std::int64_t d(Timeslot t) const { return demand[static_cast<std::size_t>(t - 1)]; }
  std::int64_t H() const;
  std::int64_t total_demand() const;
  void validate() const;
};

struct LspcSolution {
  ResourceMultiset longs;             // long id -> copies
  std::vector<int> shorts;            // picked short ids, sorted
  std::vector<std::int64_t> coverage; // coverage[t - 1] = k_t
  Cost cost = Cost::infeasible();

  friend bool operator==(const LspcSolution&, const LspcSolution&) = default;
};

enum class LspcClause {
  kNone,
  kUnknownId,
  kMeasure,          // sum_t k_t >= k
  kCoverageBound,    // 0 <= k_t <= d_t
  kCapacity,         // picked capacity at t >= k_t
  kOneShortPerSlot,  // at most one picked short per timeslot
};

const char* to_string(LspcClause clause);

struct LspcReport {
  bool feasible = false;
  Cost cost;
  LspcClause clause = LspcClause::kNone;
  std::optional<Timeslot> slot;
  std::string reason;
};

/// Checks every LSPC feasibility clause and recomputes the cost.
LspcReport verify_lspc(const LspcInstance& inst, const LspcSolution& sol);

/// Cheapest short at t that lifts residual q above free height h.
Cost gamma(Timeslot t, std::int64_t q, std::int64_t h, const LspcInstance& inst);

/// Key of the A and M tables. a == b + 1 denotes an empty range.
struct DpKey {
  Timeslot a = 1;
  Timeslot b = 0;
  std::int64_t q = 0;
  std::int64_t h = 0;

  friend bool operator==(const DpKey&, const DpKey&) = default;
};

/// True iff `earlier` must be evaluated before `later`: a strictly smaller
/// range, or the same range with smaller q, or same range and q with larger h.
bool dp_precedes(const DpKey& earlier, const DpKey& later);

struct BaseChoice {};
struct ShortsOnlyChoice {};
struct TimeCutChoice {
  Timeslot t = 0;
  std::int64_t q1 = 0;
};
struct LongChoice {
  int long_index = 0;
  Count copies = 0;
  std::int64_t q1 = 0;
  std::int64_t q2 = 0;
  std::int64_t q3 = 0;
};
using DpChoice = std::variant<BaseChoice, ShortsOnlyChoice, TimeCutChoice, LongChoice>;

struct DpEntry {
  Cost cost = Cost::infeasible();
  DpChoice choice;
};

struct DpKeyHash {
  std::size_t operator()(const DpKey& key) const noexcept;
};

/// Memoized evaluator of the A and M tables for one instance.
///
/// Entries are computed lazily on first reference. Not thread-safe; use one
/// solver per thread.
class LspcSolver {
 public:
  explicit LspcSolver(LspcInstance inst);

  const LspcInstance& instance() const { return inst_; }

  Cost table_a(const DpKey& key);
  DpEntry table_m(const DpKey& key);

  /// Optimum SLRA solution covering measure q over [1, T].
  LspcSolution solve_for(std::int64_t q);
  LspcSolution solve() { return solve_for(inst_.k); }

  /// Recursive references that did not respect dp_precedes. Always zero for a
  /// correct recurrence.
  std::size_t order_violations() const { return order_violations_; }

  std::vector<DpKey> touched_m_keys() const;

 private:
  struct AEntry {
    Cost cost = Cost::infeasible();
    std::int64_t last_share = 0;
  };

  std::int64_t demand_in(Timeslot a, Timeslot b) const;
  DpEntry compute_m(const DpKey& key);
  Cost reference_m(const DpKey& child, const DpKey& parent, std::int64_t extra_cost = 0);
  void replay_m(const DpKey& key, LspcSolution& sol);
  void replay_a(const DpKey& key, LspcSolution& sol);
  std::optional<int> cheapest_short(Timeslot t, std::int64_t need) const;

  LspcInstance inst_;
  std::int64_t H_ = 0;
  std::vector<std::int64_t> prefix_demand_;
  std::unordered_map<DpKey, DpEntry, DpKeyHash> m_memo_;
  std::unordered_map<DpKey, AEntry, DpKeyHash> a_memo_;
  std::unordered_map<DpKey, bool, DpKeyHash> in_progress_;
  std::size_t order_violations_ = 0;
};

/// Optimum SLRA solution of `inst`; cost INFEASIBLE when none exists.
LspcSolution solve_lspc(const LspcInstance& inst);

}  // namespace intervalcover

#endif  // INTERVALCOVER_LSPC_HPP_
