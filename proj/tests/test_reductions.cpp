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

#include <algorithm>

#include "doctest.h"
#include "intervalcover/reductions.hpp"
#include "support.hpp"

using namespace intervalcover;
using ictest::Rng;

namespace {

// Two mountains: jobs 0, 1 around slot 2 and job 2 around slot 6.
struct TwoMountains {
  std::vector<Job> jobs{{0, 1, 3, {}}, {1, 2, 3, {}}, {2, 5, 7, {}}};
  MountainRange range;
  TwoMountains() {
    range.mountains.push_back({2, {0, 1}, 1, 3});
    range.mountains.push_back({6, {2}, 5, 7});
  }
};

// Classifies a part using only the mountain spans. 1 = wide, 0 = narrow, -1 = neither.
int classify(const Resource& part, const MountainRange& range) {
  bool spans_all = true;
  int touched = 0;
  bool inside_one = false;
  for (const Mountain& m : range.mountains) {
    if (part.e < m.span_s || part.s > m.span_e) continue;
    ++touched;
    spans_all = spans_all && part.s <= m.span_s && m.span_e <= part.e;
    inside_one = inside_one || (m.span_s <= part.s && part.e <= m.span_e);
  }
  if (touched == 0) return -1;
  if (spans_all) return 1;
  return touched == 1 && inside_one ? 0 : -1;
}

MountainRange random_range(Rng& rng, Instance& inst) {
  // Three disjoint blocks of width 4 with a mountain in each.
  inst.T = 12;
  inst.jobs.clear();
  MountainRange range;
  for (int b = 0; b < 3; ++b) {
    const auto lo = static_cast<Timeslot>(1 + 4 * b);
    const auto hi = static_cast<Timeslot>(lo + 3);
    const auto peak = static_cast<Timeslot>(rng(lo, hi));
    Mountain m;
    m.peak = peak;
    m.span_s = hi;
    m.span_e = lo;
    const auto count = rng(1, 3);
    for (std::int64_t i = 0; i < count; ++i) {
      Job j;
      j.id = static_cast<int>(inst.jobs.size());
      j.s = static_cast<Timeslot>(rng(lo, peak));
      j.e = static_cast<Timeslot>(rng(peak, hi));
      m.span_s = std::min(m.span_s, j.s);
      m.span_e = std::max(m.span_e, j.e);
      m.job_ids.push_back(j.id);
      inst.jobs.push_back(j);
    }
    range.mountains.push_back(m);
  }
  inst.resources.clear();
  const int m = static_cast<int>(rng(1, 6));
  for (int i = 0; i < m; ++i) inst.resources.push_back(ictest::random_resource(rng, i, inst.T, {}));
  inst.k = rng(0, static_cast<std::int64_t>(inst.jobs.size()));
  return range;
}

}  // namespace

TEST_CASE("split_narrow_wide examples") {
  const TwoMountains tm;
  const std::vector<Resource> rs{{0, 2, 2, 1, 1}, {1, 1, 7, 2, 3}, {2, 2, 6, 1, 4}, {3, 4, 4, 1, 1}};
  const SplitResult split = split_narrow_wide(tm.range, rs);
  REQUIRE(split.map.size() == 4);

  // strictly inside mountain 0
  int parts0 = 0;
  for (const auto& id : split.map[0]) {
    if (!id) continue;
    ++parts0;
    CHECK(split.derived[static_cast<std::size_t>(*id)].s == 2);
    CHECK(split.derived[static_cast<std::size_t>(*id)].e == 2);
    CHECK(split.parts[static_cast<std::size_t>(*id)].kind != PartKind::kWide);
  }
  CHECK(parts0 == 1);

  // exactly the union of spans: one wide part
  CHECK_FALSE(split.map[1][0].has_value());
  CHECK_FALSE(split.map[1][2].has_value());
  REQUIRE(split.map[1][1].has_value());
  const Resource& wide = split.derived[static_cast<std::size_t>(*split.map[1][1])];
  CHECK(wide.s == 1);
  CHECK(wide.e == 7);
  CHECK(wide.w == 2);
  CHECK(wide.c == 3);

  // partial on both ends: two narrows, no wide
  REQUIRE(split.map[2][0].has_value());
  REQUIRE(split.map[2][2].has_value());
  CHECK_FALSE(split.map[2][1].has_value());
  CHECK(split.derived[static_cast<std::size_t>(*split.map[2][0])].e == 3);
  CHECK(split.derived[static_cast<std::size_t>(*split.map[2][2])].s == 5);

  // touches no mountain
  for (const auto& id : split.map[3]) CHECK_FALSE(id.has_value());
}

TEST_CASE("split parts classify independently") {
  Rng rng(51);
  for (int round = 0; round < 200; ++round) {
    Instance inst;
    const MountainRange range = random_range(rng, inst);
    const SplitResult split = split_narrow_wide(range, inst.resources);
    CHECK(split.derived.size() == split.parts.size());
    for (std::size_t d = 0; d < split.derived.size(); ++d) {
      const Resource& part = split.derived[d];
      const Resource& original = inst.resources[static_cast<std::size_t>(split.parts[d].original_id)];
      CHECK(part.id == static_cast<int>(d));
      CHECK(original.s <= part.s);
      CHECK(part.e <= original.e);
      CHECK(part.w == original.w);
      CHECK(part.c == original.c);
      const int kind = classify(part, range);
      CHECK(kind >= 0);
      CHECK((kind == 1) == (split.parts[d].kind == PartKind::kWide));
    }
  }
}

TEST_CASE("lift_split takes the max over parts") {
  const TwoMountains tm;
  const std::vector<Resource> rs{{0, 2, 6, 1, 4}};
  const SplitResult split = split_narrow_wide(tm.range, rs);
  REQUIRE(split.map[0][0].has_value());
  REQUIRE(split.map[0][2].has_value());
  PartialSolution derived;
  derived.multiset.add(*split.map[0][0], 2);
  derived.multiset.add(*split.map[0][2], 1);
  derived.covered = {0, 2};
  const PartialSolution lifted = lift_split(derived, split);
  CHECK(lifted.multiset.count(0) == 2);
  CHECK(lifted.covered == derived.covered);
  CHECK(lift_split({}, split) == PartialSolution{});
}

TEST_CASE("build_lspc examples") {
  // one mountain, one wide resource, no narrows
  const std::vector<Job> jobs{{0, 2, 4, {}}, {1, 3, 5, {}}};
  MountainRange range;
  range.mountains.push_back({3, {0, 1}, 2, 5});
  const std::vector<Resource> rs{{0, 1, 6, 1, 5}};
  const SplitResult split = split_narrow_wide(range, rs);
  const LspcReduction red = build_lspc(range, split, jobs, 6, 2);
  CHECK(red.lspc.T == 1);
  CHECK(red.lspc.demand == std::vector<std::int64_t>{2});
  CHECK(red.lspc.shorts.empty());
  REQUIRE(red.lspc.longs.size() == 1);
  CHECK(red.lspc.longs[0].c == 5);
  CHECK(red.lspc.k == 2);

  // a narrow resource covering exactly job 0
  const std::vector<Resource> narrow{{0, 2, 4, 1, 7}};
  const SplitResult split2 = split_narrow_wide(range, narrow);
  const LspcReduction red2 = build_lspc(range, split2, jobs, 6, 2);
  REQUIRE(red2.lspc.shorts.size() == 1);
  CHECK(red2.lspc.shorts[0].w == 1);
  CHECK(red2.lspc.shorts[0].c == 7);
  CHECK(red2.associations[0].kappa == 1);
  CHECK(red2.associations[0].covered == std::vector<int>{0});
  CHECK(verify_association(red2.associations[0], split2, jobs, 6));
}

TEST_CASE("build_lspc associations verify on random ranges") {
  Rng rng(52);
  for (int round = 0; round < 150; ++round) {
    Instance inst;
    const MountainRange range = random_range(rng, inst);
    const SplitResult split = split_narrow_wide(range, inst.resources);
    const auto n = static_cast<std::int64_t>(range.job_count());
    const LspcReduction red = build_lspc(range, split, inst.jobs, inst.T, n);
    CHECK(red.lspc.total_demand() == n);
    CHECK(red.lspc.T == static_cast<Timeslot>(range.mountains.size()));
    CHECK(red.associations.size() == red.lspc.shorts.size());
    for (std::size_t i = 0; i < red.associations.size(); ++i) {
      const ShortAssociation& assoc = red.associations[i];
      CHECK(verify_association(assoc, split, inst.jobs, inst.T));
      CHECK(red.lspc.shorts[i].t == assoc.mountain + 1);
      CHECK(red.lspc.shorts[i].w == assoc.kappa);
      CHECK(Cost(red.lspc.shorts[i].c) == assoc.cost);
    }
    for (std::size_t l = 0; l < red.lspc.longs.size(); ++l) {
      CHECK(split.parts[static_cast<std::size_t>(red.long_to_derived[l])].kind == PartKind::kWide);
    }
  }
}

TEST_CASE("lift_lspc examples") {
  const std::vector<Job> jobs{{0, 2, 4, {}}, {1, 3, 5, {}}};
  MountainRange range;
  range.mountains.push_back({3, {0, 1}, 2, 5});
  const std::vector<Resource> rs{{0, 1, 6, 1, 5}};
  const SplitResult split = split_narrow_wide(range, rs);
  const LspcReduction red = build_lspc(range, split, jobs, 6, 2);

  LspcSolution one;
  one.longs.add(0);
  one.coverage = {1};
  one.cost = Cost(5);
  const PartialSolution lifted = lift_lspc(one, red, range);
  CHECK(lifted.covered == std::vector<int>{0});
  CHECK(lifted.multiset.count(red.long_to_derived[0]) == 1);

  LspcSolution empty;
  empty.coverage = {0};
  empty.cost = Cost(0);
  CHECK(lift_lspc(empty, red, range) == PartialSolution{});

  LspcSolution broken;
  broken.coverage = {2};
  broken.longs.add(0);
  CHECK_THROWS_AS(lift_lspc(broken, red, range), std::logic_error);
}

TEST_CASE("pc_to_smfc and the exact SMFC solver") {
  Instance none;
  none.T = 3;
  const PcReduction empty = pc_to_smfc(none);
  CHECK(empty.smfc.demand == Profile(3));
  CHECK(empty.smfc.s_types.empty());

  Instance inst;
  inst.T = 2;
  inst.jobs = {{0, 1, 2, 5}};
  inst.resources = {{0, 1, 2, 1, 3}};
  const PcReduction red = pc_to_smfc(inst);
  CHECK(red.smfc.demand == Profile(std::vector<std::int64_t>{1, 1}));
  REQUIRE(red.smfc.s_types.size() == 1);
  CHECK(red.smfc.s_types[0].s == 1);
  CHECK(red.smfc.s_types[0].e == 2);
  CHECK(red.smfc.s_types[0].w == 1);
  CHECK(red.smfc.s_types[0].c == 5);
  REQUIRE(red.smfc.m_types.size() == 1);
  CHECK(red.smfc.m_types[0].c == 3);

  const SmfcSolution sol = smfc_solve_exact(red.smfc);
  CHECK(sol.cost == Cost(3));
  CHECK(sol.s_selected.empty());
  CHECK(verify_smfc(red.smfc, sol));
  CHECK(smfc_solve_exact(empty.smfc).cost == Cost(0));

  Instance big;
  big.T = 1;
  for (int j = 0; j < 17; ++j) big.jobs.push_back({j, 1, 1, 1});
  CHECK_THROWS_AS(smfc_solve_exact(pc_to_smfc(big).smfc), BudgetExceeded);
}

TEST_CASE("lift_smfc examples") {
  Instance inst;
  inst.T = 2;
  inst.jobs = {{0, 1, 1, 4}, {1, 2, 2, 6}};
  inst.resources = {{0, 1, 2, 1, 3}};
  const PcReduction red = pc_to_smfc(inst);

  SmfcSolution all_s;
  all_s.s_selected = {0, 1};
  all_s.cost = Cost(10);
  const CoverResult skip = lift_smfc(all_s, red, 2);
  CHECK(skip.solution.covered.empty());
  CHECK(skip.cost == Cost(10));
  CHECK(verify_prize(inst, skip.solution).cost == Cost(10));

  SmfcSolution m_only;
  m_only.m_types.add(0);
  m_only.cost = Cost(3);
  const CoverResult full = lift_smfc(m_only, red, 2);
  CHECK(full.solution.covered == std::vector<int>{0, 1});
  CHECK(full.cost == Cost(3));
}

TEST_CASE("smfc_solve_exact matches a flat enumeration") {
  Rng rng(53);
  ictest::Shape shape;
  shape.max_jobs = 5;
  shape.max_resources = 3;
  shape.max_T = 6;
  shape.penalties = true;
  for (int round = 0; round < 150; ++round) {
    const Instance inst = ictest::random_instance(rng, shape);
    const PcReduction red = pc_to_smfc(inst);
    const SmfcInstance& smfc = red.smfc;
    const std::int64_t peak = smfc.demand.max();
    // S subsets x bounded M copy vectors, with no pruning.
    Cost flat = Cost::infeasible();
    const std::size_t s = smfc.s_types.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << s); ++mask) {
      std::vector<std::int64_t> copies(smfc.m_types.size(), 0);
      while (true) {
        std::int64_t cost = 0;
        bool ok = true;
        for (Timeslot t = 1; t <= smfc.demand.length(); ++t) {
          std::int64_t supply = 0;
          for (std::size_t i = 0; i < s; ++i) {
            if (mask >> i & 1U) supply += smfc.s_types[i].active_at(t) ? smfc.s_types[i].w : 0;
          }
          for (std::size_t i = 0; i < copies.size(); ++i) {
            supply += smfc.m_types[i].active_at(t) ? copies[i] * smfc.m_types[i].w : 0;
          }
          ok = ok && supply >= smfc.demand(t);
        }
        if (ok) {
          for (std::size_t i = 0; i < s; ++i) cost += (mask >> i & 1U) ? smfc.s_types[i].c : 0;
          for (std::size_t i = 0; i < copies.size(); ++i) cost += copies[i] * smfc.m_types[i].c;
          flat = std::min(flat, Cost(cost));
        }
        std::size_t i = 0;
        while (i < copies.size() && ++copies[i] > (peak + smfc.m_types[i].w - 1) / smfc.m_types[i].w) copies[i++] = 0;
        if (i == copies.size()) break;
      }
    }
    const SmfcSolution sol = smfc_solve_exact(smfc);
    CHECK(sol.cost == flat);
    CHECK(verify_smfc(smfc, sol));
    CHECK(red.smfc.demand == job_profile(inst.jobs, inst.T));
    const CoverResult lifted = lift_smfc(sol, red, inst.jobs.size());
    const VerificationReport report = verify_prize(inst, lifted.solution);
    CHECK(report.feasible);
    CHECK(report.cost == sol.cost);
    CHECK(lifted.cost == sol.cost);
  }
}
