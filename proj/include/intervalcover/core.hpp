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

// Domain types shared by every solver: jobs, resources, instances, profiles,
// resource multisets and exact integer costs, plus feasibility checks for the
// partial and prize-collecting problem variants.

#ifndef INTERVALCOVER_CORE_HPP_
#define INTERVALCOVER_CORE_HPP_

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace intervalcover {

/// Integer timeslot on the discrete timeline 1..T.
using Timeslot = std::int32_t;

/// Copy count of a resource inside a multiset.
using Count = std::int64_t;

/// Thrown for malformed inputs (bad ids, mismatched lengths, broken invariants).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an exact solver is asked to exceed its configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact non-negative integer cost, or the distinguished INFEASIBLE value.
///
/// INFEASIBLE compares greater than every finite cost and absorbs addition.
/// Overflow of finite arithmetic throws std::overflow_error rather than
/// wrapping or silently saturating.
class Cost {
 public:
  constexpr Cost() = default;
  constexpr explicit Cost(std::int64_t value) : value_(value) {}

  static constexpr Cost infeasible() {
    Cost c;
    c.finite_ = false;
    return c;
  }

  constexpr bool is_finite() const { return finite_; }
  constexpr bool is_infeasible() const { return !finite_; }

  /// Finite value; throws std::logic_error on INFEASIBLE.
  std::int64_t value() const;

  Cost& operator+=(Cost other);
  friend Cost operator+(Cost lhs, Cost rhs) { return lhs += rhs; }

  /// Multiplies a finite cost by a non-negative factor.
  Cost scaled(std::int64_t factor) const;

  friend constexpr bool operator==(Cost lhs, Cost rhs) {
    if (lhs.finite_ != rhs.finite_) return false;
    return !lhs.finite_ || lhs.value_ == rhs.value_;
  }
  friend constexpr std::strong_ordering operator<=>(Cost lhs, Cost rhs) {
    if (!lhs.finite_ || !rhs.finite_) {
      return static_cast<int>(!lhs.finite_) <=> static_cast<int>(!rhs.finite_);
    }
    return lhs.value_ <=> rhs.value_;
  }

  std::string to_string() const;

 private:
  std::int64_t value_ = 0;
  bool finite_ = true;
};

struct Job {
  int id = 0;
  Timeslot s = 1;
  Timeslot e = 1;
  std::optional<std::int64_t> penalty;

  std::int64_t length() const { return static_cast<std::int64_t>(e) - s + 1; }
  bool active_at(Timeslot t) const { return s <= t && t <= e; }
};

struct Resource {
  int id = 0;
  Timeslot s = 1;
  Timeslot e = 1;
  std::int64_t w = 1;
  std::int64_t c = 0;

  bool active_at(Timeslot t) const { return s <= t && t <= e; }
};

/// A PartialResAll / PrizeCollectingResAll instance. Job and resource ids are
/// dense and equal to their position in the respective vector.
struct Instance {
  Timeslot T = 1;
  std::vector<Job> jobs;
  std::vector<Resource> resources;
  std::optional<std::int64_t> k;

  /// Throws InvalidInput naming the first broken invariant.
  void validate() const;
  bool has_penalties() const;
};

/// Configurable upper bound on the timeline length.
inline constexpr Timeslot kDefaultMaxTimeline = 100000;

/// Per-timeslot non-negative integer vector, addressed by timeslot 1..T.
class Profile {
 public:
  Profile() = default;
  explicit Profile(Timeslot T) : values_(static_cast<std::size_t>(T), 0) {}
  explicit Profile(std::vector<std::int64_t> values) : values_(std::move(values)) {}

  Timeslot length() const { return static_cast<Timeslot>(values_.size()); }

  std::int64_t operator()(Timeslot t) const { return values_[static_cast<std::size_t>(t - 1)]; }
  std::int64_t& operator()(Timeslot t) { return values_[static_cast<std::size_t>(t - 1)]; }

  std::int64_t max() const;
  std::int64_t sum() const;
  std::span<const std::int64_t> values() const { return values_; }

  /// Adds `amount` over the closed range [s, e].
  void add_interval(Timeslot s, Timeslot e, std::int64_t amount);

  friend bool operator==(const Profile&, const Profile&) = default;

 private:
  std::vector<std::int64_t> values_;
};

/// Resource id -> copy count (every stored count is >= 1).
class ResourceMultiset {
 public:
  ResourceMultiset() = default;

  /// Adds `copies` (>= 0) of resource `id`; adding zero is a no-op.
  void add(int id, Count copies = 1);
  void set(int id, Count copies);
  Count count(int id) const;
  bool empty() const { return counts_.empty(); }
  std::size_t distinct() const { return counts_.size(); }
  const std::map<int, Count>& counts() const { return counts_; }

  /// Pointwise sum of copy counts.
  ResourceMultiset& merge(const ResourceMultiset& other);

  /// Σ count(i)·c(i); throws InvalidInput on an unknown id.
  Cost cost(std::span<const Resource> resources) const;

  friend bool operator==(const ResourceMultiset&, const ResourceMultiset&) = default;

 private:
  std::map<int, Count> counts_;
};

/// Multiset of resources together with the ids of the jobs it claims to cover.
struct PartialSolution {
  ResourceMultiset multiset;
  std::vector<int> covered;  // sorted, unique

  friend bool operator==(const PartialSolution&, const PartialSolution&) = default;
};

/// A solver's answer: the solution and the cost the solver claims for it.
/// When `cost` is INFEASIBLE the solution is empty.
struct CoverResult {
  PartialSolution solution;
  Cost cost = Cost::infeasible();
};

/// P(t) = number of jobs active at t.
Profile job_profile(std::span<const Job> jobs, Timeslot T);

/// Job profile of the subset of `jobs` named by `ids`.
Profile job_profile(std::span<const Job> jobs, std::span<const int> ids, Timeslot T);

/// P(t) = Σ over resources i active at t of count(i)·w(i).
/// Throws InvalidInput on an id that does not name a resource.
Profile multiset_profile(const ResourceMultiset& ms, std::span<const Resource> resources,
                         Timeslot T);

/// True iff lhs(t) >= rhs(t) at every timeslot. Throws on length mismatch.
bool covers(const Profile& lhs, const Profile& rhs);

/// First timeslot where `lhs` fails to cover `rhs`, if any.
std::optional<Timeslot> first_uncovered(const Profile& lhs, const Profile& rhs);

struct VerificationReport {
  bool feasible = false;
  Cost cost;  // resource cost for partial; resource cost + penalties for prize
  std::optional<Timeslot> violated_slot;
  std::string reason;
};

/// Checks |covered| >= k and that the multiset covers the covered jobs' profile.
VerificationReport verify_partial(const Instance& inst, const PartialSolution& sol);

/// Checks coverage; total = multiset cost + penalties of uncovered jobs.
VerificationReport verify_prize(const Instance& inst, const PartialSolution& sol);

/// Checks that the multiset covers the profile of every job.
VerificationReport verify_full(const Instance& inst, const PartialSolution& sol);

}  // namespace intervalcover

#endif  // INTERVALCOVER_CORE_HPP_
