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

// Acceptance harness. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "intervalcover/driver.hpp"
#include "intervalcover/io.hpp"
#include "intervalcover/mountains.hpp"
#include "intervalcover/oracle.hpp"
#include "support.hpp"

using namespace intervalcover;
using ictest::Rng;

namespace {

struct Outcome {
  std::size_t cases = 0;
  std::size_t violations = 0;
  std::string note;
  std::string first_failure;

  void fail(const std::string& what) {
    if (violations++ == 0) first_failure = what;
  }
};

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

int failed_criteria = 0;

void report(int id, const char* title, const Outcome& out, std::size_t min_cases, double seconds, double limit) {
  const bool pass = out.violations == 0 && out.cases >= min_cases && (limit <= 0 || seconds < limit);
  if (!pass) ++failed_criteria;
  std::printf("[%s] criterion %d: %s: %zu cases, %zu violations, %.2f s", pass ? "PASS" : "FAIL", id, title,
              out.cases, out.violations, seconds);
  if (limit > 0) std::printf(" (limit %.0f s)", limit);
  if (!out.note.empty()) std::printf("; %s", out.note.c_str());
  if (!out.first_failure.empty()) std::printf("; first failure: %s", out.first_failure.c_str());
  std::printf("\n");
  std::fflush(stdout);
}

std::string tag(const char* what, std::uint64_t seed) { return std::string(what) + " seed " + std::to_string(seed); }

// Per-seed sizes drawn from a separate stream so the library generator sees
// varied shapes.
GenerateParams shape_for(std::uint64_t seed, int max_jobs, int min_res, int max_res, Timeslot max_T) {
  Rng rng(seed * 7919 + 17);
  GenerateParams p;
  p.jobs = static_cast<int>(rng(0, max_jobs));
  p.resources = static_cast<int>(rng(min_res, max_res));
  p.T = static_cast<Timeslot>(rng(1, max_T));
  p.max_w = 3;
  p.max_c = 10;
  return p;
}

// 1. Every approximate output passes its verifier.
Outcome feasibility_suite() {
  Outcome out;
  const GenerateProfile instance_profiles[] = {GenerateProfile::kSingleMountain, GenerateProfile::kMountainRange,
                                               GenerateProfile::kUniformRandom};
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    for (GenerateProfile profile : instance_profiles) {
      GenerateParams params = shape_for(seed, 10, 0, 6, 15);
      const Instance inst = generate_instance(seed, profile, params);
      const PartialResult partial = solve_partial(inst);
      ++out.cases;
      if (partial.result.cost.is_finite()) {
        const VerificationReport r = verify_partial(inst, partial.result.solution);
        if (!r.feasible || r.cost != partial.result.cost) out.fail(tag(to_string(profile), seed) + " partial");
      }

      params.penalties = true;
      const Instance pc = generate_instance(seed, profile, params);
      const CoverResult prize = solve_prize(pc);
      ++out.cases;
      const VerificationReport r = verify_prize(pc, prize.solution);
      if (!r.feasible || r.cost != prize.cost) out.fail(tag(to_string(profile), seed) + " prize");
    }
    GenerateParams lp;
    Rng rng(seed + 5);
    lp.T = static_cast<Timeslot>(rng(1, 8));
    lp.max_demand = rng(0, 4);
    lp.shorts = static_cast<int>(rng(0, 5));
    lp.longs = static_cast<int>(rng(0, 5));
    const LspcInstance inst = generate_lspc(seed, lp);
    const LspcSolution sol = solve_lspc(inst);
    ++out.cases;
    if (sol.cost.is_finite()) {
      const LspcReport r = verify_lspc(inst, sol);
      if (!r.feasible || r.cost != sol.cost) out.fail(tag("lspc-random", seed));
    }
  }
  return out;
}

// 2. oracle <= single_mountain_solve <= 2 oracle.
Outcome single_mountain_bound() {
  Outcome out;
  std::int64_t worst_num = 0;
  std::int64_t worst_den = 1;
  for (std::uint64_t seed = 0; seed < 250; ++seed) {
    GenerateParams params = shape_for(seed, 7, 1, 4, 10);  // the generator may add one backbone resource
    params.jobs = std::max(params.jobs, 1);
    const Instance inst = generate_instance(seed, GenerateProfile::kSingleMountain, params);
    ++out.cases;
    if (inst.jobs.size() > 7 || inst.resources.size() > 5 || inst.T > 10) out.fail(tag("size", seed));
    const CoverResult got = single_mountain_solve(inst.jobs, inst.resources, inst.T, *inst.k);
    const CoverResult best = oracle_partial(inst);
    if (got.cost < best.cost || best.cost.scaled(2) < got.cost) out.fail(tag("bound", seed));
    if (got.cost.is_finite()) {
      const VerificationReport r = verify_partial(inst, got.solution);
      if (!r.feasible || r.cost != got.cost) out.fail(tag("verify", seed));
      if (best.cost.value() > 0 &&
          got.cost.value() * worst_den > worst_num * best.cost.value()) {
        worst_num = got.cost.value();
        worst_den = best.cost.value();
      }
    }
  }
  const std::int64_t g = std::gcd(worst_num, worst_den);
  out.note = "max ratio " + std::to_string(worst_num / std::max<std::int64_t>(g, 1)) + "/" +
             std::to_string(worst_den / std::max<std::int64_t>(g, 1));
  return out;
}

// 3 and 7. LSPC sandwich plus table invariants on every touched key.
void lspc_bound(Outcome& bound, Outcome& invariants) {
  for (std::uint64_t seed = 0; seed < 250; ++seed) {
    Rng rng(seed * 31 + 3);
    const LspcInstance inst = ictest::random_lspc(rng, 6, 3, 4, 4);
    LspcSolver solver(inst);
    const LspcSolution got = solver.solve();
    const LspcSolution best = oracle_lspc(inst);
    ++bound.cases;
    if (got.cost < best.cost || best.cost.scaled(16) < got.cost) bound.fail(tag("bound", seed));
    const Cost table = solver.table_m({1, inst.T, inst.k, 0}).cost;
    if (table != got.cost) bound.fail(tag("table", seed));
    if (got.cost.is_finite()) {
      const LspcReport r = verify_lspc(inst, got);
      if (!r.feasible || r.cost != table) bound.fail(tag("reconstruction", seed));
    }

    const std::size_t violations_before = invariants.violations;
    if (solver.order_violations() != 0) invariants.fail(tag("order", seed));
    for (const DpKey& key : solver.touched_m_keys()) {
      ++invariants.cases;
      const Cost m = solver.table_m(key).cost;
      if (solver.table_a(key) < m) invariants.fail(tag("M <= A", seed));
      if (key.q > 0 && m < solver.table_m({key.a, key.b, key.q - 1, key.h}).cost) invariants.fail(tag("q", seed));
      if (key.h < inst.H() && m < solver.table_m({key.a, key.b, key.q, key.h + 1}).cost) {
        invariants.fail(tag("h", seed));
      }
    }
    // The probes above may touch new keys; they must also respect the order.
    if (solver.order_violations() != 0 && invariants.violations == violations_before) {
      invariants.fail(tag("order after probes", seed));
    }
  }
}

// 4 and 8. End-to-end partial bound, with every range solve audited.
void partial_bound(Outcome& bound, Outcome& lifts) {
  std::int64_t worst_num = 0;
  std::int64_t worst_den = 1;
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const GenerateProfile profile = seed % 2 == 0 ? GenerateProfile::kUniformRandom : GenerateProfile::kMountainRange;
    const GenerateParams params = shape_for(seed, 8, 0, 5, 12);
    const Instance inst = generate_instance(seed, profile, params);
    if (inst.jobs.size() > 8 || inst.resources.size() > 6 || inst.T > 12) bound.fail(tag("size", seed));

    std::set<const RangeSolver*> audited;
    const auto observer = [&](RangeSolver& rs, const RangeSolveTrace& trace) {
      if (audited.insert(&rs).second) {
        for (const ShortAssociation& assoc : rs.reduction().associations) {
          ++lifts.cases;
          if (!verify_association(assoc, rs.split(), inst.jobs, inst.T)) lifts.fail(tag("association", seed));
        }
      }
      if (trace.lspc.cost.is_infeasible()) return;
      ++lifts.cases;
      const VerificationReport derived = verify_partial(rs.derived_instance(trace.kappa), trace.derived);
      if (!derived.feasible || trace.lspc.cost < trace.derived_cost) lifts.fail(tag("lift_lspc", seed));
      Instance original = inst;
      original.k = trace.kappa;
      const VerificationReport lifted = verify_partial(original, trace.lifted);
      if (!lifted.feasible || trace.derived_cost < trace.lifted_cost) lifts.fail(tag("lift_split", seed));
    };

    // Per-range instances are rebuilt inside the observer, so the solver sees
    // the same `inst` the checks use.
    const PartialResult got = solve_partial(inst, observer);
    const CoverResult best = oracle_partial(inst);
    ++bound.cases;
    if (got.result.cost < best.cost || best.cost.scaled(got.certified_factor) < got.result.cost) {
      bound.fail(tag("bound", seed));
    }
    if (got.result.cost.is_finite()) {
      const VerificationReport r = verify_partial(inst, got.result.solution);
      if (!r.feasible) bound.fail(tag("verify", seed));
      if (best.cost.value() > 0 && got.result.cost.value() * worst_den > worst_num * best.cost.value()) {
        worst_num = got.result.cost.value();
        worst_den = best.cost.value();
      }
    }
  }
  const std::int64_t g = std::max<std::int64_t>(std::gcd(worst_num, worst_den), 1);
  char decimal[32];
  std::snprintf(decimal, sizeof decimal, "%.3f", worst_den ? static_cast<double>(worst_num) / worst_den : 0.0);
  bound.note = "empirical max ratio " + std::to_string(worst_num / g) + "/" + std::to_string(worst_den / g) + " (" +
               decimal + ")";
}

// 5. solve_prize equals oracle_prize.
Outcome prize_exactness() {
  Outcome out;
  for (std::uint64_t seed = 0; seed < 250; ++seed) {
    GenerateParams params = shape_for(seed, 8, 0, 5, 12);
    params.penalties = true;
    const auto profile = static_cast<GenerateProfile>(seed % 3);
    const Instance inst = generate_instance(seed, profile, params);
    ++out.cases;
    const CoverResult got = solve_prize(inst);
    if (got.cost != oracle_prize(inst).cost) out.fail(tag("total", seed));
    const VerificationReport r = verify_prize(inst, got.solution);
    if (!r.feasible || r.cost != got.cost) out.fail(tag("verify", seed));
  }
  return out;
}

// 6. Decomposition partitions, ranges verify, L within bound.
Outcome decomposition() {
  Outcome out;
  for (std::uint64_t seed = 0; seed < 600; ++seed) {
    Rng rng(seed * 104729 + 1);
    const auto T = static_cast<Timeslot>(rng(1, 10000));
    const int n = static_cast<int>(rng(1, 200));
    std::vector<Job> jobs;
    // Mix wide-range and short jobs so length ratios vary.
    const Timeslot cap = rng.coin() ? T : std::min<Timeslot>(T, static_cast<Timeslot>(rng(1, 64)));
    for (int j = 0; j < n; ++j) {
      Job job;
      job.id = j;
      job.s = static_cast<Timeslot>(rng(1, T));
      job.e = static_cast<Timeslot>(std::min<std::int64_t>(T, job.s + rng(0, cap - 1)));
      jobs.push_back(job);
    }
    ++out.cases;
    const Decomposition d = decompose(jobs);
    std::vector<int> seen;
    for (const MountainRange& range : d.ranges) {
      if (!verify_mountain_range(range, jobs)) out.fail(tag("range", seed));
      for (int id : range.job_ids()) seen.push_back(id);
    }
    std::sort(seen.begin(), seen.end());
    std::vector<int> all(jobs.size());
    std::iota(all.begin(), all.end(), 0);
    if (seen != all) out.fail(tag("partition", seed));
    std::int64_t lmin = INT64_MAX;
    std::int64_t lmax = 0;
    for (const Job& j : jobs) {
      lmin = std::min(lmin, j.length());
      lmax = std::max(lmax, j.length());
    }
    // 4 * max(1, ceil(log2(lmax / lmin))) by doubling, independent of the library.
    std::int64_t r = 0;
    while ((lmin << r) < lmax) ++r;
    if (static_cast<std::int64_t>(d.L()) > 4 * std::max<std::int64_t>(1, r)) out.fail(tag("L bound", seed));
  }
  return out;
}

}  // namespace

int main() {
  {
    Timer t;
    const Outcome out = feasibility_suite();
    report(1, "feasibility suite", out, 500, t.seconds(), 120);
  }
  {
    Timer t;
    const Outcome out = single_mountain_bound();
    report(2, "single-mountain bound", out, 200, t.seconds(), 60);
  }
  Outcome lspc;
  Outcome dp;
  double lspc_seconds = 0;
  {
    Timer t;
    lspc_bound(lspc, dp);
    lspc_seconds = t.seconds();
    report(3, "LSPC bound", lspc, 200, lspc_seconds, 120);
  }
  Outcome partial;
  Outcome lifts;
  double partial_seconds = 0;
  {
    Timer t;
    partial_bound(partial, lifts);
    partial_seconds = t.seconds();
    report(4, "end-to-end partial bound", partial, 100, partial_seconds, 300);
  }
  {
    Timer t;
    const Outcome out = prize_exactness();
    report(5, "prize-collecting exactness", out, 200, t.seconds(), 120);
  }
  {
    Timer t;
    const Outcome out = decomposition();
    report(6, "decomposition", out, 500, t.seconds(), 30);
  }
  report(7, "DP internal invariants", dp, 1, lspc_seconds, 0);
  report(8, "reduction round-trips", lifts, 1, partial_seconds, 0);
  return failed_criteria == 0 ? 0 : 1;
}
