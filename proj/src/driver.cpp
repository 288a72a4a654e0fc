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

#include "intervalcover/driver.hpp"

#include <algorithm>
#include <memory>

namespace intervalcover {

RangeSolver::RangeSolver(const MountainRange& range, const Instance& inst, std::int64_t max_kappa)
    : range_(range),
      inst_(inst),
      split_(split_narrow_wide(range, inst.resources)),
      reduction_(build_lspc(range, split_, inst.jobs, inst.T, max_kappa)),
      solver_(reduction_.lspc) {}

Instance RangeSolver::derived_instance(std::int64_t kappa) const {
  Instance derived;
  derived.T = inst_.T;
  derived.jobs = inst_.jobs;
  derived.resources = split_.derived;
  derived.k = kappa;
  return derived;
}

CoverResult RangeSolver::solve(std::int64_t kappa, RangeSolveTrace* trace) {
  CoverResult out;
  RangeSolveTrace local;
  RangeSolveTrace& t = trace ? *trace : local;
  t = RangeSolveTrace{};
  t.kappa = kappa;
  if (kappa < 0 || kappa > static_cast<std::int64_t>(range_.job_count())) return out;

  t.lspc = solver_.solve_for(kappa);
  if (t.lspc.cost.is_infeasible()) return out;

  t.derived = lift_lspc(t.lspc, reduction_, range_);
  t.derived_cost = t.derived.multiset.cost(split_.derived);
  t.lifted = lift_split(t.derived, split_);
  t.lifted_cost = t.lifted.multiset.cost(inst_.resources);
  out.solution = t.lifted;
  out.cost = t.lifted_cost;
  return out;
}

CoverResult range_solve(const MountainRange& range, const Instance& inst, std::int64_t kappa) {
  RangeSolver solver(range, inst, kappa);
  return solver.solve(kappa);
}

PartialResult solve_partial(const Instance& inst, const RangeObserver& observer) {
  if (!inst.k) throw InvalidInput("the partial problem needs the partiality parameter k");
  const std::int64_t k = *inst.k;
  PartialResult out;
  if (k > static_cast<std::int64_t>(inst.jobs.size())) {
    Instance unconstrained = inst;
    unconstrained.k.reset();
    unconstrained.validate();
    return out;
  }
  inst.validate();

  if (inst.jobs.empty()) {
    out.certified_factor = kRangeApproxFactor;
    out.combine.push_back({Cost(0)});
    if (k == 0) out.result.cost = Cost(0);
    return out;
  }

  const Decomposition decomposition = decompose(inst.jobs);
  const std::size_t L = decomposition.L();
  out.L = L;
  out.certified_factor = kRangeApproxFactor * static_cast<std::int64_t>(std::max<std::size_t>(1, L));

  // range_costs[q][kappa] and the solutions achieving them.
  std::vector<std::vector<CoverResult>> table(L);
  for (std::size_t q = 0; q < L; ++q) {
    const MountainRange& range = decomposition.ranges[q];
    const std::int64_t top = std::min<std::int64_t>(k, static_cast<std::int64_t>(range.job_count()));
    RangeSolver solver(range, inst, top);
    for (std::int64_t kappa = 0; kappa <= top; ++kappa) {
      RangeSolveTrace trace;
      table[q].push_back(solver.solve(kappa, &trace));
      if (observer) observer(solver, trace);
    }
    std::vector<Cost> costs;
    for (const CoverResult& r : table[q]) costs.push_back(r.cost);
    out.range_costs.push_back(std::move(costs));
  }

  // combine[q][kappa]: cheapest way to cover kappa jobs from the first q ranges.
  std::vector<std::vector<Cost>> combine(L + 1, std::vector<Cost>(static_cast<std::size_t>(k) + 1, Cost::infeasible()));
  std::vector<std::vector<std::int64_t>> back(L + 1, std::vector<std::int64_t>(static_cast<std::size_t>(k) + 1, 0));
  combine[0][0] = Cost(0);
  for (std::size_t q = 1; q <= L; ++q) {
    const auto& row = table[q - 1];
    for (std::int64_t kappa = 0; kappa <= k; ++kappa) {
      for (std::int64_t take = 0; take <= kappa && take < static_cast<std::int64_t>(row.size()); ++take) {
        const Cost total = combine[q - 1][static_cast<std::size_t>(kappa - take)] + row[static_cast<std::size_t>(take)].cost;
        if (total < combine[q][static_cast<std::size_t>(kappa)]) {
          combine[q][static_cast<std::size_t>(kappa)] = total;
          back[q][static_cast<std::size_t>(kappa)] = take;
        }
      }
    }
  }
  out.combine = combine;

  const Cost best = combine[L][static_cast<std::size_t>(k)];
  if (best.is_infeasible()) return out;
  std::int64_t remaining = k;
  for (std::size_t q = L; q >= 1; --q) {
    const std::int64_t take = back[q][static_cast<std::size_t>(remaining)];
    const PartialSolution& part = table[q - 1][static_cast<std::size_t>(take)].solution;
    out.result.solution.multiset.merge(part.multiset);
    out.result.solution.covered.insert(out.result.solution.covered.end(), part.covered.begin(), part.covered.end());
    remaining -= take;
  }
  std::sort(out.result.solution.covered.begin(), out.result.solution.covered.end());
  out.result.cost = best;
  return out;
}

CoverResult solve_prize(const Instance& inst, std::size_t max_s_types) {
  inst.validate();
  const PcReduction reduction = pc_to_smfc(inst);
  const SmfcSolution smfc = smfc_solve_exact(reduction.smfc, max_s_types);
  return lift_smfc(smfc, reduction, inst.jobs.size());
}

}  // namespace intervalcover
