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

// Problem reductions and their lifts.
//
// Mountain range -> LSPC happens in two steps. First every resource is cut
// into at most three parts so that each part is either narrow (inside one
// mountain's span) or wide (fully spans every mountain it touches). Then each
// mountain collapses to one LSPC timeslot: wide parts become long resources,
// and for every mountain and every kappa the best narrow-only cover of kappa
// of its jobs becomes a short resource of capacity kappa.
//
// Prize-collecting -> SMFC turns every job into a single-use resource with the
// job's interval, unit capacity and the job's penalty as cost.

#ifndef INTERVALCOVER_REDUCTIONS_HPP_
#define INTERVALCOVER_REDUCTIONS_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "intervalcover/core.hpp"
#include "intervalcover/lspc.hpp"
#include "intervalcover/mountains.hpp"

namespace intervalcover {

enum class PartKind { kLeftNarrow = 0, kWide = 1, kRightNarrow = 2 };

struct DerivedPart {
  int original_id = 0;
  PartKind kind = PartKind::kWide;
  int first_mountain = 0;  // 0-based mountain indices the part belongs to / spans
  int last_mountain = 0;
};

struct SplitResult {
  std::vector<Resource> derived;          // dense ids 0..
  std::vector<DerivedPart> parts;         // parallel to `derived`
  // per original resource id: derived ids of (left-narrow, wide, right-narrow)
  std::vector<std::array<std::optional<int>, 3>> map;
};

SplitResult split_narrow_wide(const MountainRange& range, std::span<const Resource> resources);

/// Each original resource gets the maximum copy count over its parts. The
/// covered job set is unchanged.
PartialSolution lift_split(const PartialSolution& derived_solution, const SplitResult& split);

struct ShortAssociation {
  int mountain = 0;                 // 0-based; LSPC timeslot is mountain + 1
  std::int64_t kappa = 0;
  ResourceMultiset multiset;        // derived resource ids (narrow parts)
  std::vector<int> covered;         // job ids, |covered| == kappa
  Cost cost;
};

struct LspcReduction {
  LspcInstance lspc;
  std::vector<ShortAssociation> associations;  // indexed by LSPC short id
  std::vector<int> long_to_derived;            // LSPC long id -> derived id
};

/// `jobs` is indexed by job id. Infeasible (mountain, kappa) pairs emit no
/// short resource.
LspcReduction build_lspc(const MountainRange& range, const SplitResult& split, std::span<const Job> jobs,
                         Timeslot T, std::int64_t k);

/// True iff the association's multiset covers exactly its kappa listed jobs.
bool verify_association(const ShortAssociation& assoc, const SplitResult& split, std::span<const Job> jobs,
                        Timeslot T);

/// Maps an LSPC solution back to the narrow/wide instance. The result is keyed
/// by derived resource ids and costs exactly what the LSPC solution costs.
/// Throws std::logic_error if a peak lacks the long capacity the coverage
/// profile promises (impossible for feasible input).
PartialSolution lift_lspc(const LspcSolution& lspc_solution, const LspcReduction& reduction,
                          const MountainRange& range);

struct SmfcInstance {
  Profile demand;
  std::vector<Resource> s_types;  // at most one copy each
  std::vector<Resource> m_types;  // unlimited copies
};

struct SmfcSolution {
  std::vector<int> s_selected;    // sorted S-type ids
  ResourceMultiset m_types;
  Cost cost = Cost::infeasible();
};

struct PcReduction {
  SmfcInstance smfc;
  std::vector<int> s_type_job;    // S-type id -> job id
};

/// Checks coverage of the demand with S-types used at most once.
bool verify_smfc(const SmfcInstance& inst, const SmfcSolution& sol);

PcReduction pc_to_smfc(const Instance& inst);

inline constexpr std::size_t kDefaultMaxSTypes = 16;

/// Exact: every S-type subset plus the optimal M-type cover of what remains.
/// Throws BudgetExceeded above `max_s_types` S-types.
SmfcSolution smfc_solve_exact(const SmfcInstance& inst, std::size_t max_s_types = kDefaultMaxSTypes);

/// Jobs whose S-type was selected go uncovered and pay their penalty; every
/// other job is covered by the M-types. The returned cost is the prize total.
CoverResult lift_smfc(const SmfcSolution& sol, const PcReduction& reduction, std::size_t job_count);

}  // namespace intervalcover

#endif  // INTERVALCOVER_REDUCTIONS_HPP_
