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

#ifndef INTERVALCOVER_FULLCOVER_HPP_
#define INTERVALCOVER_FULLCOVER_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "intervalcover/core.hpp"

namespace intervalcover {

/// Exact rational guarantee factor of a cover subroutine.
struct Ratio {
  std::int64_t num = 1;
  std::int64_t den = 1;
  friend bool operator==(const Ratio&, const Ratio&) = default;
};

struct FullCoverResult {
  ResourceMultiset multiset;  // keyed by Resource::id
  Cost cost = Cost::infeasible();
  Ratio beta;                 // 1/1: the search below is exact
};

/// ceil(max_t demand(t) / w(i)) for every resource, in input order.
std::vector<Count> copy_upper_bounds(const Profile& demand, std::span<const Resource> resources);

/// Minimum-cost multiset whose profile covers `demand`.
///
/// Returns INFEASIBLE iff some timeslot with positive demand has no active
/// resource. Among equal-cost optima the copy vector (in input order) that is
/// lexicographically smallest wins, so results are reproducible.
FullCoverResult full_cover(const Profile& demand, std::span<const Resource> resources);

/// Branch-and-bound over copy counts in [0, upper_bounds[i]].
///
/// Resources are branched in decreasing w/c order while searching for the
/// optimum value; a second ordered pass recovers the lexicographically
/// smallest optimal copy vector. Prunes on partial cost plus a per-slot
/// ratio bound, and on remaining capacity.
FullCoverResult full_cover_bounded_search(const Profile& demand, std::span<const Resource> resources,
                                          std::span<const Count> upper_bounds);

}  // namespace intervalcover

#endif  // INTERVALCOVER_FULLCOVER_HPP_
