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

// Shared helpers for the unit and acceptance suites: seeded instance
// builders and small brute-force references that do not reuse library code.

#ifndef INTERVALCOVER_TESTS_SUPPORT_HPP_
#define INTERVALCOVER_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <random>
#include <tuple>
#include <vector>

#include "intervalcover/core.hpp"
#include "intervalcover/lspc.hpp"

namespace intervalcover {
inline std::ostream& operator<<(std::ostream& out, const Cost& cost) { return out << cost.to_string(); }
}  // namespace intervalcover

namespace ictest {

using namespace intervalcover;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::int64_t operator()(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
  }
  bool coin() { return (*this)(0, 1) == 1; }

 private:
  std::mt19937_64 engine_;
};

struct Shape {
  int max_jobs = 6;
  int min_jobs = 0;
  int max_resources = 4;
  Timeslot max_T = 10;
  std::int64_t max_w = 3;
  std::int64_t max_c = 10;
  bool penalties = false;
  std::int64_t max_penalty = 10;
};

inline std::pair<Timeslot, Timeslot> interval(Rng& rng, Timeslot lo, Timeslot hi) {
  auto a = static_cast<Timeslot>(rng(lo, hi));
  auto b = static_cast<Timeslot>(rng(lo, hi));
  return {std::min(a, b), std::max(a, b)};
}

inline Resource random_resource(Rng& rng, int id, Timeslot T, const Shape& shape) {
  Resource r;
  r.id = id;
  std::tie(r.s, r.e) = interval(rng, 1, T);
  r.w = rng(1, shape.max_w);
  r.c = rng(0, shape.max_c);
  return r;
}

/// Jobs anywhere on the timeline; k drawn in [0, n].
inline Instance random_instance(Rng& rng, const Shape& shape) {
  Instance inst;
  inst.T = static_cast<Timeslot>(rng(1, shape.max_T));
  const int n = static_cast<int>(rng(shape.min_jobs, shape.max_jobs));
  for (int j = 0; j < n; ++j) {
    Job job;
    job.id = j;
    std::tie(job.s, job.e) = interval(rng, 1, inst.T);
    if (shape.penalties) job.penalty = rng(0, shape.max_penalty);
    inst.jobs.push_back(job);
  }
  const int m = static_cast<int>(rng(0, shape.max_resources));
  for (int i = 0; i < m; ++i) inst.resources.push_back(random_resource(rng, i, inst.T, shape));
  inst.k = rng(0, n);
  return inst;
}

/// Every job contains one common peak.
inline Instance random_mountain(Rng& rng, const Shape& shape) {
  Instance inst = random_instance(rng, shape);
  const auto peak = static_cast<Timeslot>(rng(1, inst.T));
  for (Job& j : inst.jobs) {
    j.s = static_cast<Timeslot>(rng(1, peak));
    j.e = static_cast<Timeslot>(rng(peak, inst.T));
  }
  return inst;
}

inline LspcInstance random_lspc(Rng& rng, Timeslot max_T, std::int64_t max_H, int max_shorts, int max_longs,
                                std::int64_t max_w = 3, std::int64_t max_c = 10) {
  LspcInstance inst;
  inst.T = static_cast<Timeslot>(rng(1, max_T));
  for (Timeslot t = 1; t <= inst.T; ++t) inst.demand.push_back(rng(0, max_H));
  const int s = static_cast<int>(rng(0, max_shorts));
  for (int i = 0; i < s; ++i) {
    inst.shorts.push_back({i, static_cast<Timeslot>(rng(1, inst.T)), rng(1, max_w), rng(0, max_c)});
  }
  const int l = static_cast<int>(rng(0, max_longs));
  for (int i = 0; i < l; ++i) {
    LongResource r;
    r.id = i;
    std::tie(r.s, r.e) = interval(rng, 1, inst.T);
    r.w = rng(1, max_w);
    r.c = rng(0, max_c);
    inst.longs.push_back(r);
  }
  inst.k = rng(0, inst.total_demand());
  return inst;
}

/// Unpruned enumeration of every copy vector with count(i) <= ceil(max demand / w(i)).
inline Cost brute_full_cover(const std::vector<std::int64_t>& demand, const std::vector<Resource>& resources) {
  std::int64_t peak = 0;
  for (std::int64_t d : demand) peak = std::max(peak, d);
  std::vector<std::int64_t> bound;
  for (const Resource& r : resources) bound.push_back((peak + r.w - 1) / r.w);
  std::vector<std::int64_t> copies(resources.size(), 0);
  Cost best = Cost::infeasible();
  while (true) {
    bool ok = true;
    for (std::size_t t = 0; t < demand.size() && ok; ++t) {
      std::int64_t supply = 0;
      for (std::size_t i = 0; i < resources.size(); ++i) {
        const auto slot = static_cast<Timeslot>(t + 1);
        if (resources[i].s <= slot && slot <= resources[i].e) supply += copies[i] * resources[i].w;
      }
      ok = supply >= demand[t];
    }
    if (ok) {
      std::int64_t cost = 0;
      for (std::size_t i = 0; i < resources.size(); ++i) cost += copies[i] * resources[i].c;
      best = std::min(best, Cost(cost));
    }
    std::size_t i = 0;
    while (i < copies.size() && ++copies[i] > bound[i]) copies[i++] = 0;
    if (i == copies.size()) break;
  }
  return best;
}

/// Per-slot count of active jobs by a direct loop.
inline std::vector<std::int64_t> count_active(const std::vector<Job>& jobs, Timeslot T) {
  std::vector<std::int64_t> out(static_cast<std::size_t>(T), 0);
  for (Timeslot t = 1; t <= T; ++t) {
    for (const Job& j : jobs) out[static_cast<std::size_t>(t - 1)] += (j.s <= t && t <= j.e) ? 1 : 0;
  }
  return out;
}

}  // namespace ictest

#endif  // INTERVALCOVER_TESTS_SUPPORT_HPP_
