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

#include "intervalcover/reductions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "intervalcover/fullcover.hpp"

namespace intervalcover {

SplitResult split_narrow_wide(const MountainRange& range, std::span<const Resource> resources) {
  SplitResult out;
  out.map.resize(resources.size());
  const auto& mountains = range.mountains;
  const int r = static_cast<int>(mountains.size());

  auto emit = [&](const Resource& original, Timeslot s, Timeslot e, PartKind kind, int first, int last) {
    Resource part = original;
    part.id = static_cast<int>(out.derived.size());
    part.s = s;
    part.e = e;
    out.derived.push_back(part);
    out.parts.push_back({original.id, kind, first, last});
    out.map[static_cast<std::size_t>(original.id)][static_cast<std::size_t>(kind)] = part.id;
  };

  for (const Resource& res : resources) {
    int first = -1;
    int last = -1;
    for (int m = 0; m < r; ++m) {
      const Mountain& mt = mountains[static_cast<std::size_t>(m)];
      if (res.s <= mt.span_e && mt.span_s <= res.e) {
        if (first < 0) first = m;
        last = m;
      }
    }
    if (first < 0) continue;

    auto fully_spans = [&](int m) {
      const Mountain& mt = mountains[static_cast<std::size_t>(m)];
      return res.s <= mt.span_s && mt.span_e <= res.e;
    };
    // Fully spanned mountains form the contiguous block [wide_lo, wide_hi].
    int wide_lo = fully_spans(first) ? first : first + 1;
    int wide_hi = fully_spans(last) ? last : last - 1;

    if (!fully_spans(first)) {
      const Mountain& mt = mountains[static_cast<std::size_t>(first)];
      emit(res, std::max(res.s, mt.span_s), std::min(res.e, mt.span_e), PartKind::kLeftNarrow, first, first);
    }
    if (wide_lo <= wide_hi) {
      emit(res, mountains[static_cast<std::size_t>(wide_lo)].span_s,
           mountains[static_cast<std::size_t>(wide_hi)].span_e, PartKind::kWide, wide_lo, wide_hi);
    }
    if (last != first && !fully_spans(last)) {
      const Mountain& mt = mountains[static_cast<std::size_t>(last)];
      emit(res, std::max(res.s, mt.span_s), std::min(res.e, mt.span_e), PartKind::kRightNarrow, last, last);
    }
  }
  return out;
}

PartialSolution lift_split(const PartialSolution& derived_solution, const SplitResult& split) {
  PartialSolution out;
  out.covered = derived_solution.covered;
  for (std::size_t original = 0; original < split.map.size(); ++original) {
    Count copies = 0;
    for (const auto& part : split.map[original]) {
      if (part) copies = std::max(copies, derived_solution.multiset.count(*part));
    }
    out.multiset.add(static_cast<int>(original), copies);
  }
  return out;
}

LspcReduction build_lspc(const MountainRange& range, const SplitResult& split, std::span<const Job> jobs,
                         Timeslot T, std::int64_t k) {
  LspcReduction out;
  const int r = static_cast<int>(range.mountains.size());
  if (r == 0) throw InvalidInput("build_lspc needs a non-empty mountain range");
  out.lspc.T = r;
  out.lspc.k = k;
  for (const Mountain& m : range.mountains) out.lspc.demand.push_back(static_cast<std::int64_t>(m.job_ids.size()));

  for (std::size_t d = 0; d < split.derived.size(); ++d) {
    const DerivedPart& part = split.parts[d];
    if (part.kind != PartKind::kWide) continue;
    const Resource& res = split.derived[d];
    LongResource lr;
    lr.id = static_cast<int>(out.lspc.longs.size());
    lr.s = part.first_mountain + 1;
    lr.e = part.last_mountain + 1;
    lr.w = res.w;
    lr.c = res.c;
    out.lspc.longs.push_back(lr);
    out.long_to_derived.push_back(static_cast<int>(d));
  }

  for (int m = 0; m < r; ++m) {
    const Mountain& mt = range.mountains[static_cast<std::size_t>(m)];
    std::vector<Resource> narrows;
    for (std::size_t d = 0; d < split.derived.size(); ++d) {
      const DerivedPart& part = split.parts[d];
      if (part.kind != PartKind::kWide && part.first_mountain == m) narrows.push_back(split.derived[d]);
    }
    std::vector<Job> mountain_jobs;
    for (int id : mt.job_ids) mountain_jobs.push_back(jobs[static_cast<std::size_t>(id)]);

    for (std::int64_t kappa = 1; kappa <= static_cast<std::int64_t>(mountain_jobs.size()); ++kappa) {
      CoverResult best = single_mountain_solve(mountain_jobs, narrows, T, kappa);
      if (best.cost.is_infeasible()) continue;
      ShortResource sr;
      sr.id = static_cast<int>(out.lspc.shorts.size());
      sr.t = m + 1;
      sr.w = kappa;
      sr.c = best.cost.value();
      out.lspc.shorts.push_back(sr);
      out.associations.push_back({m, kappa, std::move(best.solution.multiset), std::move(best.solution.covered),
                                  best.cost});
    }
  }
  return out;
}

bool verify_association(const ShortAssociation& assoc, const SplitResult& split, std::span<const Job> jobs,
                        Timeslot T) {
  if (static_cast<std::int64_t>(assoc.covered.size()) != assoc.kappa) return false;
  for (const auto& [id, copies] : assoc.multiset.counts()) {
    if (id < 0 || static_cast<std::size_t>(id) >= split.parts.size()) return false;
    const DerivedPart& part = split.parts[static_cast<std::size_t>(id)];
    if (part.kind == PartKind::kWide || part.first_mountain != assoc.mountain) return false;
    (void)copies;
  }
  if (assoc.multiset.cost(split.derived) != assoc.cost) return false;
  return covers(multiset_profile(assoc.multiset, split.derived, T), job_profile(jobs, assoc.covered, T));
}

PartialSolution lift_lspc(const LspcSolution& lspc_solution, const LspcReduction& reduction,
                          const MountainRange& range) {
  PartialSolution out;
  const LspcInstance& lspc = reduction.lspc;
  for (const auto& [long_id, copies] : lspc_solution.longs.counts()) {
    out.multiset.add(reduction.long_to_derived.at(static_cast<std::size_t>(long_id)), copies);
  }

  std::vector<std::optional<int>> short_at(static_cast<std::size_t>(lspc.T));
  for (int id : lspc_solution.shorts) {
    const ShortResource& sr = lspc.shorts.at(static_cast<std::size_t>(id));
    short_at[static_cast<std::size_t>(sr.t - 1)] = id;
  }

  std::vector<int> covered;
  for (Timeslot t = 1; t <= lspc.T; ++t) {
    const auto slot = static_cast<std::size_t>(t - 1);
    std::set<int> here;
    std::int64_t from_short = 0;
    if (short_at[slot]) {
      const ShortAssociation& assoc = reduction.associations.at(static_cast<std::size_t>(*short_at[slot]));
      out.multiset.merge(assoc.multiset);
      here.insert(assoc.covered.begin(), assoc.covered.end());
      from_short = assoc.kappa;
    }
    const std::int64_t kt = lspc_solution.coverage.at(slot);
    const std::int64_t extra = std::max<std::int64_t>(0, kt - from_short);
    std::int64_t long_capacity = 0;
    for (const auto& [long_id, copies] : lspc_solution.longs.counts()) {
      const LongResource& lr = lspc.longs.at(static_cast<std::size_t>(long_id));
      if (lr.s <= t && t <= lr.e) long_capacity += copies * lr.w;
    }
    if (long_capacity < extra) {
      throw std::logic_error("lift_lspc: wide capacity at a peak is below the jobs it must cover");
    }
    std::int64_t added = 0;
    for (int id : range.mountains[slot].job_ids) {  // sorted ascending
      if (added == extra) break;
      if (here.insert(id).second) ++added;
    }
    if (added < extra) throw std::logic_error("lift_lspc: mountain has too few jobs for its coverage");
    covered.insert(covered.end(), here.begin(), here.end());
  }
  std::sort(covered.begin(), covered.end());
  out.covered = std::move(covered);
  return out;
}

bool verify_smfc(const SmfcInstance& inst, const SmfcSolution& sol) {
  const Timeslot T = inst.demand.length();
  Profile supply(T);
  std::set<int> seen;
  Cost cost;
  for (int id : sol.s_selected) {
    if (id < 0 || static_cast<std::size_t>(id) >= inst.s_types.size() || !seen.insert(id).second) return false;
    const Resource& r = inst.s_types[static_cast<std::size_t>(id)];
    supply.add_interval(r.s, r.e, r.w);
    cost += Cost(r.c);
  }
  for (const auto& [id, copies] : sol.m_types.counts()) {
    if (id < 0 || static_cast<std::size_t>(id) >= inst.m_types.size()) return false;
    const Resource& r = inst.m_types[static_cast<std::size_t>(id)];
    supply.add_interval(r.s, r.e, copies * r.w);
    cost += Cost(r.c).scaled(copies);
  }
  return covers(supply, inst.demand) && cost == sol.cost;
}

PcReduction pc_to_smfc(const Instance& inst) {
  if (!inst.has_penalties()) throw InvalidInput("prize-collecting instances need a penalty on every job");
  PcReduction out;
  out.smfc.demand = job_profile(inst.jobs, inst.T);
  for (const Job& j : inst.jobs) {
    Resource r;
    r.id = static_cast<int>(out.smfc.s_types.size());
    r.s = j.s;
    r.e = j.e;
    r.w = 1;
    r.c = *j.penalty;
    out.smfc.s_types.push_back(r);
    out.s_type_job.push_back(j.id);
  }
  out.smfc.m_types = inst.resources;
  return out;
}

SmfcSolution smfc_solve_exact(const SmfcInstance& inst, std::size_t max_s_types) {
  const std::size_t n = inst.s_types.size();
  if (n > max_s_types) {
    throw BudgetExceeded("SMFC exact solver limited to " + std::to_string(max_s_types) + " S-type resources, got " +
                         std::to_string(n));
  }
  const Timeslot T = inst.demand.length();
  SmfcSolution best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Profile residual = inst.demand;
    Cost subset_cost;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(mask >> i & 1U)) continue;
      const Resource& r = inst.s_types[i];
      residual.add_interval(r.s, r.e, -r.w);
      subset_cost += Cost(r.c);
    }
    if (subset_cost >= best.cost) continue;
    for (Timeslot t = 1; t <= T; ++t) residual(t) = std::max<std::int64_t>(0, residual(t));
    FullCoverResult cover = full_cover(residual, inst.m_types);
    const Cost total = subset_cost + cover.cost;
    if (total < best.cost) {
      best.cost = total;
      best.m_types = std::move(cover.multiset);
      best.s_selected.clear();
      for (std::size_t i = 0; i < n; ++i) {
        if (mask >> i & 1U) best.s_selected.push_back(static_cast<int>(i));
      }
    }
  }
  return best;
}

CoverResult lift_smfc(const SmfcSolution& sol, const PcReduction& reduction, std::size_t job_count) {
  CoverResult out;
  if (sol.cost.is_infeasible()) return out;
  std::vector<bool> dropped(job_count, false);
  for (int s : sol.s_selected) dropped[static_cast<std::size_t>(reduction.s_type_job.at(static_cast<std::size_t>(s)))] = true;
  for (std::size_t j = 0; j < job_count; ++j) {
    if (!dropped[j]) out.solution.covered.push_back(static_cast<int>(j));
  }
  out.solution.multiset = sol.m_types;
  out.cost = sol.cost;
  return out;
}

}  // namespace intervalcover
