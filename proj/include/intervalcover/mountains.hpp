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

// Mountain structure of job sets.
//
// A mountain is a set of jobs that all contain one peak timeslot; a mountain
// range is a sequence of mountains whose spans are pairwise disjoint. Any job
// set splits into O(log(l_max / l_min)) mountain ranges by bucketing jobs on
// length (factor-two categories), then grouping each category by the first
// multiple of its base length the job contains, modulo 4.
//
// A single mountain is solved by trying every way to drop n - k jobs that are
// extremal in start time or end time, and full-covering what remains.

#ifndef INTERVALCOVER_MOUNTAINS_HPP_
#define INTERVALCOVER_MOUNTAINS_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "intervalcover/core.hpp"

namespace intervalcover {

struct Mountain {
  Timeslot peak = 1;
  std::vector<int> job_ids;  // sorted
  Timeslot span_s = 1;       // min start over the jobs
  Timeslot span_e = 1;       // max end over the jobs
};

struct MountainRange {
  std::vector<Mountain> mountains;  // ordered by span
  int category = 1;                 // length category the range came from
  int group = 0;                    // residue of the class index modulo 4

  std::size_t job_count() const;
  std::vector<int> job_ids() const;  // sorted
};

struct Decomposition {
  std::vector<MountainRange> ranges;
  std::int64_t min_length = 0;
  std::int64_t max_length = 0;
  int categories = 0;

  std::size_t L() const { return ranges.size(); }
};

/// 4 * max(1, ceil(log2(max_length / min_length))), computed exactly.
std::int64_t range_count_bound(std::int64_t min_length, std::int64_t max_length);

/// Splits `jobs` into mountain ranges. Throws InvalidInput on an empty set.
Decomposition decompose(std::span<const Job> jobs);

/// Every mountain's jobs contain its peak, the recorded span matches the
/// jobs, and spans are pairwise disjoint in the listed order. `jobs` is
/// indexed by job id.
bool verify_mountain_range(const MountainRange& range, std::span<const Job> jobs);

/// Job subsets of size k obtained by removing the first q1 jobs by start time
/// together with the first q2 jobs by decreasing end time, over every (q1, q2)
/// whose union has exactly n - k members. Deduplicated, in order of first
/// appearance over (q1, q2) ascending. Each subset lists ids in sorted order.
std::vector<std::vector<int>> candidate_exclusions(std::span<const Job> mountain_jobs, std::int64_t k);

/// Best full cover over all candidate_exclusions of the mountain; cost is at
/// most twice the optimum for covering k of these jobs.
CoverResult single_mountain_solve(std::span<const Job> mountain_jobs, std::span<const Resource> resources,
                                  Timeslot T, std::int64_t k);

}  // namespace intervalcover

#endif  // INTERVALCOVER_MOUNTAINS_HPP_
