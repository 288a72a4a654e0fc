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

#include "intervalcover/mountains.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "intervalcover/fullcover.hpp"

namespace intervalcover {

std::size_t MountainRange::job_count() const {
  std::size_t n = 0;
  for (const Mountain& m : mountains) n += m.job_ids.size();
  return n;
}

std::vector<int> MountainRange::job_ids() const {
  std::vector<int> ids;
  for (const Mountain& m : mountains) ids.insert(ids.end(), m.job_ids.begin(), m.job_ids.end());
  std::sort(ids.begin(), ids.end());
  return ids;
}

namespace {

// Smallest r >= 0 with min_length * 2^r >= max_length.
int ceil_log2_ratio(std::int64_t min_length, std::int64_t max_length) {
  int r = 0;
  std::int64_t reach = min_length;
  while (reach < max_length) {
    reach *= 2;
    ++r;
  }
  return r;
}

}  // namespace

std::int64_t range_count_bound(std::int64_t min_length, std::int64_t max_length) {
  return 4 * std::max(1, ceil_log2_ratio(min_length, max_length));
}

Decomposition decompose(std::span<const Job> jobs) {
  if (jobs.empty()) throw InvalidInput("decompose needs at least one job");
  Decomposition out;
  out.min_length = jobs.front().length();
  out.max_length = jobs.front().length();
  for (const Job& j : jobs) {
    out.min_length = std::min(out.min_length, j.length());
    out.max_length = std::max(out.max_length, j.length());
  }
  // Categories [2^(i-1) l_min, 2^i l_min) for i < r; the top one is closed so
  // that l_max fits even when l_max / l_min is a power of two. Classes stay
  // mountain ranges as long as lengths are at most twice the base length.
  out.categories = std::max(1, ceil_log2_ratio(out.min_length, out.max_length));

  // (category, group) -> (class index q -> job ids)
  std::map<std::pair<int, int>, std::map<std::int64_t, std::vector<int>>> buckets;
  for (const Job& j : jobs) {
    int category = 1;
    std::int64_t base = out.min_length;
    while (category < out.categories && j.length() >= 2 * base) {
      base *= 2;
      ++category;
    }
    const std::int64_t q = (static_cast<std::int64_t>(j.s) + base - 1) / base;  // first multiple of base >= s
    buckets[{category, static_cast<int>(q % 4)}][q].push_back(j.id);
  }

  std::map<int, const Job*> by_id;
  for (const Job& j : jobs) by_id[j.id] = &j;

  for (auto& [key, classes] : buckets) {
    MountainRange range;
    range.category = key.first;
    range.group = key.second;
    const std::int64_t base = out.min_length << (key.first - 1);
    for (auto& [q, ids] : classes) {
      Mountain m;
      m.peak = static_cast<Timeslot>(q * base);
      std::sort(ids.begin(), ids.end());
      m.job_ids = ids;
      m.span_s = by_id.at(ids.front())->s;
      m.span_e = by_id.at(ids.front())->e;
      for (int id : ids) {
        m.span_s = std::min(m.span_s, by_id.at(id)->s);
        m.span_e = std::max(m.span_e, by_id.at(id)->e);
      }
      range.mountains.push_back(std::move(m));
    }
    out.ranges.push_back(std::move(range));
  }
  return out;
}

bool verify_mountain_range(const MountainRange& range, std::span<const Job> jobs) {
  std::optional<Timeslot> previous_end;
  for (const Mountain& m : range.mountains) {
    if (m.job_ids.empty()) return false;
    Timeslot lo = 0;
    Timeslot hi = 0;
    bool first = true;
    for (int id : m.job_ids) {
      if (id < 0 || static_cast<std::size_t>(id) >= jobs.size()) return false;
      const Job& j = jobs[static_cast<std::size_t>(id)];
      if (!j.active_at(m.peak)) return false;
      lo = first ? j.s : std::min(lo, j.s);
      hi = first ? j.e : std::max(hi, j.e);
      first = false;
    }
    if (lo != m.span_s || hi != m.span_e) return false;
    if (previous_end && m.span_s <= *previous_end) return false;
    previous_end = m.span_e;
  }
  return true;
}

std::vector<std::vector<int>> candidate_exclusions(std::span<const Job> mountain_jobs, std::int64_t k) {
  const auto n = static_cast<std::int64_t>(mountain_jobs.size());
  if (k < 0 || k > n) throw InvalidInput("k must lie in [0, n] for candidate_exclusions");

  std::vector<const Job*> by_start;
  for (const Job& j : mountain_jobs) by_start.push_back(&j);
  std::vector<const Job*> by_end = by_start;
  std::sort(by_start.begin(), by_start.end(),
            [](const Job* a, const Job* b) { return a->s != b->s ? a->s < b->s : a->id < b->id; });
  std::sort(by_end.begin(), by_end.end(),
            [](const Job* a, const Job* b) { return a->e != b->e ? a->e > b->e : a->id < b->id; });

  std::vector<std::vector<int>> candidates;
  std::set<std::vector<int>> seen;
  for (std::int64_t q1 = 0; q1 <= n; ++q1) {
    for (std::int64_t q2 = 0; q2 <= n; ++q2) {
      std::set<int> removed;
      for (std::int64_t i = 0; i < q1; ++i) removed.insert(by_start[static_cast<std::size_t>(i)]->id);
      for (std::int64_t i = 0; i < q2; ++i) removed.insert(by_end[static_cast<std::size_t>(i)]->id);
      if (static_cast<std::int64_t>(removed.size()) != n - k) continue;
      std::vector<int> kept;
      for (const Job& j : mountain_jobs) {
        if (!removed.contains(j.id)) kept.push_back(j.id);
      }
      std::sort(kept.begin(), kept.end());
      if (seen.insert(kept).second) candidates.push_back(std::move(kept));
    }
  }
  return candidates;
}

CoverResult single_mountain_solve(std::span<const Job> mountain_jobs, std::span<const Resource> resources,
                                  Timeslot T, std::int64_t k) {
  std::map<int, const Job*> by_id;
  for (const Job& j : mountain_jobs) by_id[j.id] = &j;

  CoverResult best;
  for (const std::vector<int>& kept : candidate_exclusions(mountain_jobs, k)) {
    Profile demand(T);
    for (int id : kept) demand.add_interval(by_id.at(id)->s, by_id.at(id)->e, 1);
    FullCoverResult cover = full_cover(demand, resources);
    if (cover.cost < best.cost) {
      best.cost = cover.cost;
      best.solution.multiset = std::move(cover.multiset);
      best.solution.covered = kept;
    }
  }
  return best;
}

}  // namespace intervalcover
