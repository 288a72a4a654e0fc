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

#include "intervalcover/fullcover.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace intervalcover {

namespace {

std::int64_t ceil_div(std::int64_t num, std::int64_t den) { return (num + den - 1) / den; }

// Depth-first search over copy counts along a fixed branching order.
class CopySearch {
 public:
  CopySearch(const Profile& demand, std::span<const Resource> resources, std::vector<Count> bounds,
             std::vector<std::size_t> order)
      : resources_(resources),
        bounds_(std::move(bounds)),
        order_(std::move(order)),
        T_(demand.length()),
        residual_(demand.values().begin(), demand.values().end()),
        counts_(resources.size(), 0) {
    const std::size_t depth_count = order_.size() + 1;
    remaining_cap_.assign(depth_count, std::vector<std::int64_t>(static_cast<std::size_t>(T_), 0));
    cheapest_.assign(depth_count, std::vector<int>(static_cast<std::size_t>(T_), -1));
    for (std::size_t d = order_.size(); d-- > 0;) {
      remaining_cap_[d] = remaining_cap_[d + 1];
      cheapest_[d] = cheapest_[d + 1];
      const std::size_t idx = order_[d];
      const Resource& r = resources_[idx];
      for (Timeslot t = std::max(r.s, 1); t <= std::min(r.e, T_); ++t) {
        const auto slot = static_cast<std::size_t>(t - 1);
        remaining_cap_[d][slot] += bounds_[idx] * r.w;
        const int best = cheapest_[d][slot];
        // Smaller c/w is a better ratio: c_i * w_best < c_best * w_i.
        if (best < 0 || static_cast<__int128>(r.c) * resources_[static_cast<std::size_t>(best)].w <
                            static_cast<__int128>(resources_[static_cast<std::size_t>(best)].c) * r.w) {
          cheapest_[d][slot] = static_cast<int>(idx);
        }
      }
    }
  }

  // Optimum value search; branches high counts first to find incumbents early.
  std::optional<std::int64_t> minimize() {
    incumbent_.reset();
    minimize_from(0, 0);
    return incumbent_;
  }

  // First copy vector in lexicographic DFS order with cost <= target.
  std::optional<std::vector<Count>> first_within(std::int64_t target) {
    target_ = target;
    found_.reset();
    lex_from(0, 0);
    return found_;
  }

 private:
  // Optimistic cost still to pay from depth d on, or nullopt if the remaining
  // resources cannot reach the residual demand.
  std::optional<std::int64_t> lower_bound(std::size_t d) const {
    std::int64_t bound = 0;
    for (std::size_t slot = 0; slot < residual_.size(); ++slot) {
      const std::int64_t need = residual_[slot];
      if (need <= 0) continue;
      if (remaining_cap_[d][slot] < need) return std::nullopt;
      const Resource& best = resources_[static_cast<std::size_t>(cheapest_[d][slot])];
      const auto scaled = static_cast<__int128>(need) * best.c;
      const auto slot_bound = static_cast<std::int64_t>((scaled + best.w - 1) / best.w);
      bound = std::max(bound, slot_bound);
    }
    return bound;
  }

  void apply(std::size_t idx, Count copies, int sign) {
    const Resource& r = resources_[idx];
    const std::int64_t amount = sign * copies * r.w;
    for (Timeslot t = std::max(r.s, 1); t <= std::min(r.e, T_); ++t) {
      residual_[static_cast<std::size_t>(t - 1)] -= amount;
    }
    counts_[idx] += sign * copies;
  }

  void minimize_from(std::size_t d, std::int64_t partial) {
    const auto bound = lower_bound(d);
    if (!bound) return;
    if (incumbent_ && partial + *bound >= *incumbent_) return;
    if (d == order_.size()) {
      incumbent_ = partial;
      return;
    }
    const std::size_t idx = order_[d];
    for (Count copies = bounds_[idx]; copies >= 0; --copies) {
      apply(idx, copies, +1);
      minimize_from(d + 1, partial + copies * resources_[idx].c);
      apply(idx, copies, -1);
    }
  }

  void lex_from(std::size_t d, std::int64_t partial) {
    if (found_) return;
    const auto bound = lower_bound(d);
    if (!bound || partial + *bound > target_) return;
    if (d == order_.size()) {
      found_ = counts_;
      return;
    }
    const std::size_t idx = order_[d];
    for (Count copies = 0; copies <= bounds_[idx] && !found_; ++copies) {
      apply(idx, copies, +1);
      lex_from(d + 1, partial + copies * resources_[idx].c);
      apply(idx, copies, -1);
    }
  }

  std::span<const Resource> resources_;
  std::vector<Count> bounds_;
  std::vector<std::size_t> order_;
  Timeslot T_;
  std::vector<std::int64_t> residual_;
  std::vector<Count> counts_;
  std::vector<std::vector<std::int64_t>> remaining_cap_;
  std::vector<std::vector<int>> cheapest_;
  std::optional<std::int64_t> incumbent_;
  std::int64_t target_ = 0;
  std::optional<std::vector<Count>> found_;
};

}  // namespace

std::vector<Count> copy_upper_bounds(const Profile& demand, std::span<const Resource> resources) {
  const std::int64_t peak = demand.max();
  std::vector<Count> bounds;
  bounds.reserve(resources.size());
  for (const Resource& r : resources) bounds.push_back(ceil_div(peak, r.w));
  return bounds;
}

FullCoverResult full_cover(const Profile& demand, std::span<const Resource> resources) {
  return full_cover_bounded_search(demand, resources, copy_upper_bounds(demand, resources));
}

FullCoverResult full_cover_bounded_search(const Profile& demand, std::span<const Resource> resources,
                                          std::span<const Count> upper_bounds) {
  if (upper_bounds.size() != resources.size()) throw InvalidInput("one upper bound per resource required");
  const Timeslot T = demand.length();
  for (Timeslot t = 1; t <= T; ++t) {
    if (demand(t) < 0) throw InvalidInput("negative demand");
  }
  for (const Resource& r : resources) {
    if (r.w < 1 || r.c < 0) throw InvalidInput("resource capacity must be >= 1 and cost >= 0");
  }

  FullCoverResult result;
  if (demand.max() == 0) {
    result.cost = Cost(0);
    return result;
  }

  // More copies than needed for the tallest demand inside a resource's span
  // never help, so cap each bound there as well.
  std::vector<Count> bounds(upper_bounds.begin(), upper_bounds.end());
  std::vector<std::size_t> useful;
  for (std::size_t i = 0; i < resources.size(); ++i) {
    const Resource& r = resources[i];
    std::int64_t span_peak = 0;
    for (Timeslot t = std::max(r.s, 1); t <= std::min(r.e, T); ++t) span_peak = std::max(span_peak, demand(t));
    bounds[i] = std::min(bounds[i], ceil_div(span_peak, r.w));
    if (bounds[i] > 0) useful.push_back(i);
  }

  std::vector<std::size_t> by_ratio = useful;
  std::stable_sort(by_ratio.begin(), by_ratio.end(), [&](std::size_t a, std::size_t b) {
    // Decreasing w/c: w_a / c_a > w_b / c_b  <=>  w_a * c_b > w_b * c_a.
    return static_cast<__int128>(resources[a].w) * resources[b].c >
           static_cast<__int128>(resources[b].w) * resources[a].c;
  });

  CopySearch value_search(demand, resources, bounds, by_ratio);
  const auto optimum = value_search.minimize();
  if (!optimum) return result;

  CopySearch lex_search(demand, resources, bounds, useful);
  const auto counts = lex_search.first_within(*optimum);
  if (!counts) throw std::logic_error("full_cover: optimum not reproducible in ordered pass");
  for (std::size_t i = 0; i < resources.size(); ++i) result.multiset.add(resources[i].id, (*counts)[i]);
  result.cost = Cost(*optimum);
  return result;
}

}  // namespace intervalcover
