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

#include "intervalcover/lspc.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace intervalcover {

std::int64_t LspcInstance::H() const {
  return demand.empty() ? 0 : *std::max_element(demand.begin(), demand.end());
}

std::int64_t LspcInstance::total_demand() const {
  return std::accumulate(demand.begin(), demand.end(), std::int64_t{0});
}

void LspcInstance::validate() const {
  if (T < 1 || T > kDefaultMaxTimeline) throw InvalidInput("T must lie in [1, max timeline]");
  if (demand.size() != static_cast<std::size_t>(T)) throw InvalidInput("demands must have exactly T entries");
  for (std::size_t t = 0; t < demand.size(); ++t) {
    if (demand[t] < 0) throw InvalidInput("demands[" + std::to_string(t) + "] is negative");
  }
  for (std::size_t i = 0; i < shorts.size(); ++i) {
    const ShortResource& r = shorts[i];
    const std::string where = "shorts[" + std::to_string(i) + "]: ";
    if (r.id != static_cast<int>(i)) throw InvalidInput(where + "id is not dense");
    if (r.t < 1 || r.t > T) throw InvalidInput(where + "t outside [1,T]");
    if (r.w < 1) throw InvalidInput(where + "capacity w must be >= 1");
    if (r.c < 0) throw InvalidInput(where + "cost c must be >= 0");
  }
  for (std::size_t i = 0; i < longs.size(); ++i) {
    const LongResource& r = longs[i];
    const std::string where = "longs[" + std::to_string(i) + "]: ";
    if (r.id != static_cast<int>(i)) throw InvalidInput(where + "id is not dense");
    if (r.s < 1 || r.e > T) throw InvalidInput(where + "interval outside [1,T]");
    if (r.s > r.e) throw InvalidInput(where + "e < s");
    if (r.w < 1) throw InvalidInput(where + "capacity w must be >= 1");
    if (r.c < 0) throw InvalidInput(where + "cost c must be >= 0");
  }
  if (k < 0) throw InvalidInput("k must be >= 0");
}

const char* to_string(LspcClause clause) {
  switch (clause) {
    case LspcClause::kNone: return "none";
    case LspcClause::kUnknownId: return "unknown-id";
    case LspcClause::kMeasure: return "measure";
    case LspcClause::kCoverageBound: return "coverage-bound";
    case LspcClause::kCapacity: return "capacity";
    case LspcClause::kOneShortPerSlot: return "one-short-per-slot";
  }
  return "unknown";
}

LspcReport verify_lspc(const LspcInstance& inst, const LspcSolution& sol) {
  LspcReport report;
  auto fail = [&](LspcClause clause, std::optional<Timeslot> slot, std::string reason) {
    report.feasible = false;
    report.clause = clause;
    report.slot = slot;
    report.reason = std::move(reason);
    return report;
  };

  Cost cost;
  for (const auto& [id, copies] : sol.longs.counts()) {
    if (id < 0 || static_cast<std::size_t>(id) >= inst.longs.size()) {
      return fail(LspcClause::kUnknownId, std::nullopt, "long id " + std::to_string(id) + " does not exist");
    }
    cost += Cost(inst.longs[static_cast<std::size_t>(id)].c).scaled(copies);
  }
  std::vector<int> shorts_at(static_cast<std::size_t>(inst.T), 0);
  std::vector<std::int64_t> capacity(static_cast<std::size_t>(inst.T), 0);
  for (int id : sol.shorts) {
    if (id < 0 || static_cast<std::size_t>(id) >= inst.shorts.size()) {
      return fail(LspcClause::kUnknownId, std::nullopt, "short id " + std::to_string(id) + " does not exist");
    }
    const ShortResource& r = inst.shorts[static_cast<std::size_t>(id)];
    cost += Cost(r.c);
    shorts_at[static_cast<std::size_t>(r.t - 1)] += 1;
    capacity[static_cast<std::size_t>(r.t - 1)] += r.w;
  }
  report.cost = cost;

  if (sol.coverage.size() != static_cast<std::size_t>(inst.T)) {
    return fail(LspcClause::kCoverageBound, std::nullopt, "coverage profile must have T entries");
  }
  const std::int64_t measure = std::accumulate(sol.coverage.begin(), sol.coverage.end(), std::int64_t{0});
  if (measure < inst.k) {
    return fail(LspcClause::kMeasure, std::nullopt,
                "coverage measure " + std::to_string(measure) + " below k = " + std::to_string(inst.k));
  }
  for (Timeslot t = 1; t <= inst.T; ++t) {
    const std::int64_t kt = sol.coverage[static_cast<std::size_t>(t - 1)];
    if (kt < 0 || kt > inst.d(t)) {
      return fail(LspcClause::kCoverageBound, t, "k_t outside [0, d_t] at timeslot " + std::to_string(t));
    }
  }
  for (const auto& [id, copies] : sol.longs.counts()) {
    const LongResource& r = inst.longs[static_cast<std::size_t>(id)];
    for (Timeslot t = r.s; t <= r.e; ++t) capacity[static_cast<std::size_t>(t - 1)] += copies * r.w;
  }
  for (Timeslot t = 1; t <= inst.T; ++t) {
    const auto slot = static_cast<std::size_t>(t - 1);
    if (capacity[slot] < sol.coverage[slot]) {
      return fail(LspcClause::kCapacity, t, "capacity below k_t at timeslot " + std::to_string(t));
    }
  }
  for (Timeslot t = 1; t <= inst.T; ++t) {
    if (shorts_at[static_cast<std::size_t>(t - 1)] > 1) {
      return fail(LspcClause::kOneShortPerSlot, t, "more than one short picked at timeslot " + std::to_string(t));
    }
  }
  report.feasible = true;
  return report;
}

Cost gamma(Timeslot t, std::int64_t q, std::int64_t h, const LspcInstance& inst) {
  if (q > inst.d(t)) return Cost::infeasible();
  if (q <= h) return Cost(0);
  Cost best = Cost::infeasible();
  for (const ShortResource& r : inst.shorts) {
    if (r.t == t && r.w >= q - h) best = std::min(best, Cost(r.c));
  }
  return best;
}

bool dp_precedes(const DpKey& earlier, const DpKey& later) {
  const bool same_range = earlier.a == later.a && earlier.b == later.b;
  if (!same_range) {
    const bool inside = later.a <= earlier.a && earlier.b <= later.b;
    return inside;
  }
  if (earlier.q != later.q) return earlier.q < later.q;
  return earlier.h > later.h;
}

std::size_t DpKeyHash::operator()(const DpKey& key) const noexcept {
  std::size_t seed = std::hash<std::int64_t>{}(key.a);
  auto mix = [&seed](std::int64_t v) {
    seed ^= std::hash<std::int64_t>{}(v) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  };
  mix(key.b);
  mix(key.q);
  mix(key.h);
  return seed;
}

LspcSolver::LspcSolver(LspcInstance inst) : inst_(std::move(inst)) {
  inst_.validate();
  H_ = inst_.H();
  prefix_demand_.assign(static_cast<std::size_t>(inst_.T) + 1, 0);
  for (Timeslot t = 1; t <= inst_.T; ++t) {
    prefix_demand_[static_cast<std::size_t>(t)] = prefix_demand_[static_cast<std::size_t>(t - 1)] + inst_.d(t);
  }
}

std::int64_t LspcSolver::demand_in(Timeslot a, Timeslot b) const {
  if (a > b) return 0;
  return prefix_demand_[static_cast<std::size_t>(b)] - prefix_demand_[static_cast<std::size_t>(a - 1)];
}

Cost LspcSolver::table_a(const DpKey& key) {
  if (key.a > key.b) return key.q == 0 ? Cost(0) : Cost::infeasible();
  if (auto it = a_memo_.find(key); it != a_memo_.end()) return it->second.cost;

  AEntry entry;
  const std::int64_t top = std::min(key.q, inst_.d(key.b));
  for (std::int64_t share = 0; share <= top; ++share) {
    const Cost here = gamma(key.b, share, key.h, inst_);
    if (here.is_infeasible()) continue;
    const Cost total = table_a({key.a, key.b - 1, key.q - share, key.h}) + here;
    if (total < entry.cost) {
      entry.cost = total;
      entry.last_share = share;
    }
  }
  a_memo_.emplace(key, entry);
  return entry.cost;
}

DpEntry LspcSolver::table_m(const DpKey& key) {
  if (auto it = m_memo_.find(key); it != m_memo_.end()) return it->second;
  if (in_progress_.contains(key)) throw std::logic_error("cyclic reference in the LSPC recurrence");
  in_progress_.emplace(key, true);
  DpEntry entry = compute_m(key);
  in_progress_.erase(key);
  m_memo_.emplace(key, entry);
  return entry;
}

Cost LspcSolver::reference_m(const DpKey& child, const DpKey& parent, std::int64_t extra_cost) {
  if (!dp_precedes(child, parent)) ++order_violations_;
  return table_m(child).cost + Cost(extra_cost);
}

DpEntry LspcSolver::compute_m(const DpKey& key) {
  DpEntry best;
  // Only good profiles exist: measure cannot exceed the demand in range.
  if (key.q > demand_in(key.a, key.b)) return best;
  if (key.q == 0 || key.h >= H_) {
    best.cost = Cost(0);
    best.choice = BaseChoice{};
    return best;
  }

  best.cost = table_a(key);
  best.choice = ShortsOnlyChoice{};

  for (Timeslot t = key.a; t < key.b; ++t) {
    const std::int64_t left_cap = demand_in(key.a, t);
    const std::int64_t right_cap = demand_in(t + 1, key.b);
    for (std::int64_t q1 = 0; q1 <= key.q; ++q1) {
      if (q1 > left_cap || key.q - q1 > right_cap) continue;
      const Cost left = reference_m({key.a, t, q1, key.h}, key);
      if (left.is_infeasible() || left >= best.cost) continue;
      const Cost total = left + reference_m({t + 1, key.b, key.q - q1, key.h}, key);
      if (total < best.cost) {
        best.cost = total;
        best.choice = TimeCutChoice{t, q1};
      }
    }
  }

  for (std::size_t i = 0; i < inst_.longs.size(); ++i) {
    const LongResource& r = inst_.longs[i];
    const Timeslot lo = std::max(key.a, r.s);
    const Timeslot hi = std::min(key.b, r.e);
    if (lo > hi) continue;
    const std::int64_t mid_cap = demand_in(lo, hi);
    for (Count copies = 1; copies <= H_; ++copies) {
      if (copies * r.w <= key.h) continue;
      // Once alpha w(i) reaches H, more copies only add cost.
      if ((copies - 1) * r.w >= H_) break;
      const std::int64_t inner_h = std::min(H_, copies * r.w);
      const Cost fixed = Cost(r.c).scaled(copies);
      if (fixed >= best.cost) continue;
      for (std::int64_t q1 = 0; q1 <= key.q; ++q1) {
        const Cost left = table_a({key.a, lo - 1, q1, key.h});
        if (left.is_infeasible()) continue;
        for (std::int64_t q2 = 0; q1 + q2 <= key.q; ++q2) {
          if (q2 > mid_cap) break;
          const std::int64_t q3 = key.q - q1 - q2;
          const Cost right = table_a({hi + 1, key.b, q3, key.h});
          if (right.is_infeasible()) continue;
          const Cost partial = fixed + left + right;
          if (partial >= best.cost) continue;
          const Cost total = partial + reference_m({lo, hi, q2, inner_h}, key);
          if (total < best.cost) {
            best.cost = total;
            best.choice = LongChoice{static_cast<int>(i), copies, q1, q2, q3};
          }
        }
      }
    }
  }
  return best;
}

std::optional<int> LspcSolver::cheapest_short(Timeslot t, std::int64_t need) const {
  std::optional<int> best;
  for (const ShortResource& r : inst_.shorts) {
    if (r.t != t || r.w < need) continue;
    if (!best || r.c < inst_.shorts[static_cast<std::size_t>(*best)].c) best = r.id;
  }
  return best;
}

void LspcSolver::replay_a(const DpKey& key, LspcSolution& sol) {
  DpKey cur = key;
  while (cur.a <= cur.b) {
    table_a(cur);
    const std::int64_t share = a_memo_.at(cur).last_share;
    sol.coverage[static_cast<std::size_t>(cur.b - 1)] = share;
    if (share > cur.h) {
      const auto pick = cheapest_short(cur.b, share - cur.h);
      if (!pick) throw std::logic_error("A-table replay found no short resource");
      sol.shorts.push_back(*pick);
    }
    cur = {cur.a, cur.b - 1, cur.q - share, cur.h};
  }
}

void LspcSolver::replay_m(const DpKey& key, LspcSolution& sol) {
  const DpEntry entry = table_m(key);
  if (entry.cost.is_infeasible()) throw std::logic_error("replay of an infeasible M entry");
  std::visit(
      [&](const auto& choice) {
        using Choice = std::decay_t<decltype(choice)>;
        if constexpr (std::is_same_v<Choice, BaseChoice>) {
          // Free: coverage is paid for by the enclosing long resource.
          std::int64_t remaining = key.q;
          for (Timeslot t = key.a; t <= key.b && remaining > 0; ++t) {
            const std::int64_t take = std::min(remaining, inst_.d(t));
            sol.coverage[static_cast<std::size_t>(t - 1)] = take;
            remaining -= take;
          }
        } else if constexpr (std::is_same_v<Choice, ShortsOnlyChoice>) {
          replay_a(key, sol);
        } else if constexpr (std::is_same_v<Choice, TimeCutChoice>) {
          replay_m({key.a, choice.t, choice.q1, key.h}, sol);
          replay_m({choice.t + 1, key.b, key.q - choice.q1, key.h}, sol);
        } else {
          const LongResource& r = inst_.longs[static_cast<std::size_t>(choice.long_index)];
          const Timeslot lo = std::max(key.a, r.s);
          const Timeslot hi = std::min(key.b, r.e);
          sol.longs.add(r.id, choice.copies);
          replay_a({key.a, lo - 1, choice.q1, key.h}, sol);
          replay_m({lo, hi, choice.q2, std::min(H_, choice.copies * r.w)}, sol);
          replay_a({hi + 1, key.b, choice.q3, key.h}, sol);
        }
      },
      entry.choice);
}

LspcSolution LspcSolver::solve_for(std::int64_t q) {
  LspcSolution sol;
  sol.coverage.assign(static_cast<std::size_t>(inst_.T), 0);
  if (q < 0) throw InvalidInput("negative partiality");
  if (q > inst_.total_demand()) return sol;
  const DpKey root{1, inst_.T, q, 0};
  const DpEntry entry = table_m(root);
  if (entry.cost.is_infeasible()) return sol;
  replay_m(root, sol);
  std::sort(sol.shorts.begin(), sol.shorts.end());
  sol.cost = entry.cost;
  return sol;
}

std::vector<DpKey> LspcSolver::touched_m_keys() const {
  std::vector<DpKey> keys;
  keys.reserve(m_memo_.size());
  for (const auto& [key, entry] : m_memo_) keys.push_back(key);
  std::sort(keys.begin(), keys.end(), [](const DpKey& x, const DpKey& y) {
    return std::tie(x.a, x.b, x.q, x.h) < std::tie(y.a, y.b, y.q, y.h);
  });
  return keys;
}

LspcSolution solve_lspc(const LspcInstance& inst) {
  LspcSolver solver(inst);
  return solver.solve();
}

}  // namespace intervalcover
