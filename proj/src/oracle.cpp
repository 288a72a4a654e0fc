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

#include "intervalcover/oracle.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <map>
#include <string>

#include "intervalcover/fullcover.hpp"

namespace intervalcover {

OracleBudget OracleBudget::parse(std::string_view text) {
  OracleBudget budget;
  while (!text.empty()) {
    const std::size_t comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    if (item.empty()) continue;
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) throw InvalidInput("budget entry without '=': " + std::string(item));
    const std::string_view key = item.substr(0, eq);
    const std::string_view raw = item.substr(eq + 1);
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(raw.data(), raw.data() + raw.size(), value);
    if (ec != std::errc{} || ptr != raw.data() + raw.size() || value < 0) {
      throw InvalidInput("bad budget value for " + std::string(key));
    }
    if (key == "partial_jobs") {
      budget.partial_jobs = value;
    } else if (key == "lspc_profiles") {
      budget.lspc_profiles = value;
    } else if (key == "prize_jobs") {
      budget.prize_jobs = value;
    } else if (key == "smfc_s_types") {
      budget.smfc_s_types = value;
    } else {
      throw InvalidInput("unknown budget key " + std::string(key));
    }
  }
  return budget;
}

OracleBudget OracleBudget::from_env() {
  const char* text = std::getenv("INTERVALCOVER_BUDGET");
  return text ? parse(text) : OracleBudget{};
}

CoverResult oracle_partial(const Instance& inst, const OracleBudget& budget) {
  inst.validate();
  if (!inst.k) throw InvalidInput("oracle_partial needs the partiality parameter k");
  const auto n = static_cast<std::int64_t>(inst.jobs.size());
  if (n > budget.partial_jobs) {
    throw BudgetExceeded("oracle_partial enumerates at most " + std::to_string(budget.partial_jobs) + " jobs, got " +
                         std::to_string(n));
  }
  const std::int64_t k = *inst.k;

  CoverResult best;
  std::vector<int> subset(static_cast<std::size_t>(k));
  for (std::int64_t i = 0; i < k; ++i) subset[static_cast<std::size_t>(i)] = static_cast<int>(i);
  while (true) {
    FullCoverResult cover = full_cover(job_profile(inst.jobs, subset, inst.T), inst.resources);
    if (cover.cost < best.cost) {
      best.cost = cover.cost;
      best.solution.multiset = std::move(cover.multiset);
      best.solution.covered = subset;
    }
    // Next k-combination of 0..n-1 in lexicographic order.
    std::int64_t pos = k - 1;
    while (pos >= 0 && subset[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
    if (pos < 0) break;
    ++subset[static_cast<std::size_t>(pos)];
    for (std::int64_t j = pos + 1; j < k; ++j) {
      subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return best;
}

LspcSolution oracle_lspc(const LspcInstance& inst, const OracleBudget& budget) {
  inst.validate();
  std::int64_t profiles = 1;
  for (std::int64_t d : inst.demand) {
    if (profiles > budget.lspc_profiles / (d + 1)) {
      throw BudgetExceeded("oracle_lspc coverage-profile count exceeds " + std::to_string(budget.lspc_profiles));
    }
    profiles *= d + 1;
  }
  if (profiles > budget.lspc_profiles) {
    throw BudgetExceeded("oracle_lspc coverage-profile count exceeds " + std::to_string(budget.lspc_profiles));
  }

  const auto T = static_cast<std::size_t>(inst.T);
  std::vector<Resource> longs;
  for (const LongResource& lr : inst.longs) longs.push_back({lr.id, lr.s, lr.e, lr.w, lr.c});
  std::vector<std::vector<int>> options(T);  // per slot: -1 (none) or short id
  for (std::size_t t = 0; t < T; ++t) options[t].push_back(-1);
  for (const ShortResource& sr : inst.shorts) options[static_cast<std::size_t>(sr.t - 1)].push_back(sr.id);

  std::map<std::vector<std::int64_t>, FullCoverResult> cover_memo;
  LspcSolution best;
  best.coverage.assign(T, 0);

  std::vector<std::int64_t> coverage(T, 0);
  while (true) {
    std::int64_t measure = 0;
    for (std::int64_t v : coverage) measure += v;
    if (measure >= inst.k) {
      std::vector<std::size_t> pick(T, 0);
      while (true) {
        Cost short_cost;
        std::vector<std::int64_t> residual(T, 0);
        for (std::size_t t = 0; t < T; ++t) {
          const int id = options[t][pick[t]];
          std::int64_t supplied = 0;
          if (id >= 0) {
            supplied = inst.shorts[static_cast<std::size_t>(id)].w;
            short_cost += Cost(inst.shorts[static_cast<std::size_t>(id)].c);
          }
          residual[t] = std::max<std::int64_t>(0, coverage[t] - supplied);
        }
        auto it = cover_memo.find(residual);
        if (it == cover_memo.end()) {
          it = cover_memo.emplace(residual, full_cover(Profile(residual), longs)).first;
        }
        const Cost total = short_cost + it->second.cost;
        if (total < best.cost) {
          best.cost = total;
          best.longs = it->second.multiset;
          best.shorts.clear();
          for (std::size_t t = 0; t < T; ++t) {
            if (options[t][pick[t]] >= 0) best.shorts.push_back(options[t][pick[t]]);
          }
          std::sort(best.shorts.begin(), best.shorts.end());
          best.coverage = coverage;
        }
        std::size_t t = 0;
        while (t < T && ++pick[t] == options[t].size()) pick[t++] = 0;
        if (t == T) break;
      }
    }
    std::size_t t = 0;
    while (t < T && ++coverage[t] > inst.demand[t]) coverage[t++] = 0;
    if (t == T) break;
  }
  if (best.cost.is_infeasible()) best = LspcSolution{{}, {}, std::vector<std::int64_t>(T, 0), Cost::infeasible()};
  return best;
}

CoverResult oracle_prize(const Instance& inst, const OracleBudget& budget) {
  inst.validate();
  if (!inst.has_penalties()) throw InvalidInput("oracle_prize needs a penalty on every job");
  const auto n = static_cast<std::int64_t>(inst.jobs.size());
  if (n > budget.prize_jobs || n >= 62) {
    throw BudgetExceeded("oracle_prize enumerates at most " + std::to_string(budget.prize_jobs) + " jobs, got " +
                         std::to_string(n));
  }
  CoverResult best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<int> subset;
    Cost penalties;
    for (std::int64_t j = 0; j < n; ++j) {
      if (mask >> j & 1U) {
        subset.push_back(static_cast<int>(j));
      } else {
        penalties += Cost(*inst.jobs[static_cast<std::size_t>(j)].penalty);
      }
    }
    if (penalties >= best.cost) continue;
    FullCoverResult cover = full_cover(job_profile(inst.jobs, subset, inst.T), inst.resources);
    const Cost total = cover.cost + penalties;
    if (total < best.cost) {
      best.cost = total;
      best.solution.multiset = std::move(cover.multiset);
      best.solution.covered = std::move(subset);
    }
  }
  return best;
}

}  // namespace intervalcover
