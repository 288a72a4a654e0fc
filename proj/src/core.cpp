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

#include "intervalcover/core.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace intervalcover {

std::int64_t Cost::value() const {
  if (!finite_) throw std::logic_error("value() of an INFEASIBLE cost");
  return value_;
}

Cost& Cost::operator+=(Cost other) {
  if (!finite_ || !other.finite_) {
    *this = infeasible();
    return *this;
  }
  std::int64_t sum = 0;
  if (__builtin_add_overflow(value_, other.value_, &sum)) {
    throw std::overflow_error("cost overflow");
  }
  value_ = sum;
  return *this;
}

Cost Cost::scaled(std::int64_t factor) const {
  if (factor < 0) throw std::invalid_argument("negative cost factor");
  if (!finite_) return *this;
  std::int64_t product = 0;
  if (__builtin_mul_overflow(value_, factor, &product)) {
    throw std::overflow_error("cost overflow");
  }
  return Cost(product);
}

std::string Cost::to_string() const {
  return finite_ ? std::to_string(value_) : std::string("infeasible");
}

namespace {

std::string interval_error(const char* what, std::size_t index, const char* detail) {
  std::ostringstream out;
  out << what << "[" << index << "]: " << detail;
  return out.str();
}

}  // namespace

void Instance::validate() const {
  if (T < 1 || T > kDefaultMaxTimeline) {
    throw InvalidInput("T must lie in [1, " + std::to_string(kDefaultMaxTimeline) + "]");
  }
  for (std::size_t j = 0; j < jobs.size(); ++j) {
    const Job& job = jobs[j];
    if (job.id != static_cast<int>(j)) throw InvalidInput(interval_error("jobs", j, "id is not dense"));
    if (job.s < 1 || job.e > T) throw InvalidInput(interval_error("jobs", j, "interval outside [1,T]"));
    if (job.s > job.e) throw InvalidInput(interval_error("jobs", j, "e < s"));
    if (job.penalty && *job.penalty < 0) throw InvalidInput(interval_error("jobs", j, "negative penalty"));
  }
  for (std::size_t i = 0; i < resources.size(); ++i) {
    const Resource& r = resources[i];
    if (r.id != static_cast<int>(i)) throw InvalidInput(interval_error("resources", i, "id is not dense"));
    if (r.s < 1 || r.e > T) throw InvalidInput(interval_error("resources", i, "interval outside [1,T]"));
    if (r.s > r.e) throw InvalidInput(interval_error("resources", i, "e < s"));
    if (r.w < 1) throw InvalidInput(interval_error("resources", i, "capacity w must be >= 1"));
    if (r.c < 0) throw InvalidInput(interval_error("resources", i, "cost c must be >= 0"));
  }
  if (k && (*k < 0 || *k > static_cast<std::int64_t>(jobs.size()))) {
    throw InvalidInput("k must lie in [0, number of jobs]");
  }
}

bool Instance::has_penalties() const {
  return std::all_of(jobs.begin(), jobs.end(), [](const Job& j) { return j.penalty.has_value(); });
}

std::int64_t Profile::max() const {
  return values_.empty() ? 0 : *std::max_element(values_.begin(), values_.end());
}

std::int64_t Profile::sum() const {
  return std::accumulate(values_.begin(), values_.end(), std::int64_t{0});
}

void Profile::add_interval(Timeslot s, Timeslot e, std::int64_t amount) {
  for (Timeslot t = s; t <= e; ++t) (*this)(t) += amount;
}

void ResourceMultiset::add(int id, Count copies) {
  if (copies < 0) throw InvalidInput("negative copy count");
  if (copies == 0) return;
  counts_[id] += copies;
}

void ResourceMultiset::set(int id, Count copies) {
  if (copies < 0) throw InvalidInput("negative copy count");
  if (copies == 0) {
    counts_.erase(id);
  } else {
    counts_[id] = copies;
  }
}

Count ResourceMultiset::count(int id) const {
  auto it = counts_.find(id);
  return it == counts_.end() ? 0 : it->second;
}

ResourceMultiset& ResourceMultiset::merge(const ResourceMultiset& other) {
  for (const auto& [id, copies] : other.counts_) add(id, copies);
  return *this;
}

Cost ResourceMultiset::cost(std::span<const Resource> resources) const {
  Cost total;
  for (const auto& [id, copies] : counts_) {
    if (id < 0 || static_cast<std::size_t>(id) >= resources.size()) {
      throw InvalidInput("unknown resource id " + std::to_string(id));
    }
    total += Cost(resources[static_cast<std::size_t>(id)].c).scaled(copies);
  }
  return total;
}

Profile job_profile(std::span<const Job> jobs, Timeslot T) {
  Profile p(T);
  for (const Job& j : jobs) p.add_interval(j.s, j.e, 1);
  return p;
}

Profile job_profile(std::span<const Job> jobs, std::span<const int> ids, Timeslot T) {
  Profile p(T);
  for (int id : ids) {
    if (id < 0 || static_cast<std::size_t>(id) >= jobs.size()) {
      throw InvalidInput("unknown job id " + std::to_string(id));
    }
    const Job& j = jobs[static_cast<std::size_t>(id)];
    p.add_interval(j.s, j.e, 1);
  }
  return p;
}

Profile multiset_profile(const ResourceMultiset& ms, std::span<const Resource> resources,
                         Timeslot T) {
  Profile p(T);
  for (const auto& [id, copies] : ms.counts()) {
    if (id < 0 || static_cast<std::size_t>(id) >= resources.size()) {
      throw InvalidInput("unknown resource id " + std::to_string(id));
    }
    const Resource& r = resources[static_cast<std::size_t>(id)];
    p.add_interval(std::max(r.s, 1), std::min(r.e, T), copies * r.w);
  }
  return p;
}

std::optional<Timeslot> first_uncovered(const Profile& lhs, const Profile& rhs) {
  if (lhs.length() != rhs.length()) throw InvalidInput("profile length mismatch");
  for (Timeslot t = 1; t <= lhs.length(); ++t) {
    if (lhs(t) < rhs(t)) return t;
  }
  return std::nullopt;
}

bool covers(const Profile& lhs, const Profile& rhs) { return !first_uncovered(lhs, rhs).has_value(); }

namespace {

// Shared checks: ids valid, covered set unique, multiset covers covered jobs.
VerificationReport check_coverage(const Instance& inst, const PartialSolution& sol) {
  VerificationReport report;
  std::set<int> seen;
  for (int id : sol.covered) {
    if (id < 0 || static_cast<std::size_t>(id) >= inst.jobs.size()) {
      report.reason = "covered job id " + std::to_string(id) + " does not exist";
      report.cost = Cost::infeasible();
      return report;
    }
    if (!seen.insert(id).second) {
      report.reason = "job id " + std::to_string(id) + " listed twice";
      report.cost = Cost::infeasible();
      return report;
    }
  }
  for (const auto& [id, copies] : sol.multiset.counts()) {
    if (id < 0 || static_cast<std::size_t>(id) >= inst.resources.size()) {
      report.reason = "resource id " + std::to_string(id) + " does not exist";
      report.cost = Cost::infeasible();
      return report;
    }
    (void)copies;
  }
  report.cost = sol.multiset.cost(inst.resources);
  const Profile supply = multiset_profile(sol.multiset, inst.resources, inst.T);
  const Profile demand = job_profile(inst.jobs, sol.covered, inst.T);
  if (auto slot = first_uncovered(supply, demand)) {
    report.violated_slot = slot;
    report.reason = "capacity " + std::to_string(supply(*slot)) + " below demand " +
                    std::to_string(demand(*slot)) + " at timeslot " + std::to_string(*slot);
    return report;
  }
  report.feasible = true;
  return report;
}

}  // namespace

VerificationReport verify_partial(const Instance& inst, const PartialSolution& sol) {
  if (!inst.k) throw InvalidInput("verify_partial requires the partiality parameter k");
  VerificationReport report = check_coverage(inst, sol);
  if (!report.feasible) return report;
  if (static_cast<std::int64_t>(sol.covered.size()) < *inst.k) {
    report.feasible = false;
    report.reason = "covers " + std::to_string(sol.covered.size()) + " jobs, fewer than k = " +
                    std::to_string(*inst.k);
  }
  return report;
}

VerificationReport verify_prize(const Instance& inst, const PartialSolution& sol) {
  if (!inst.has_penalties()) throw InvalidInput("verify_prize requires a penalty on every job");
  // The total is reported even when coverage fails.
  VerificationReport report = check_coverage(inst, sol);
  std::vector<bool> is_covered(inst.jobs.size(), false);
  for (int id : sol.covered) {
    if (id >= 0 && static_cast<std::size_t>(id) < is_covered.size()) is_covered[static_cast<std::size_t>(id)] = true;
  }
  for (const Job& j : inst.jobs) {
    if (!is_covered[static_cast<std::size_t>(j.id)]) report.cost += Cost(*j.penalty);
  }
  return report;
}

VerificationReport verify_full(const Instance& inst, const PartialSolution& sol) {
  VerificationReport report = check_coverage(inst, sol);
  if (!report.feasible) return report;
  if (sol.covered.size() != inst.jobs.size()) {
    report.feasible = false;
    report.reason = "full cover must cover every job";
  }
  return report;
}

}  // namespace intervalcover
