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

// JSON file formats (all carry "version": 1 and reject unknown fields) and
// the seeded instance generator.
//
// Instance:  {"version":1, "T":10, "k":3,
//             "jobs":[{"s":1,"e":4,"penalty":5}, ...],
//             "resources":[{"s":1,"e":10,"w":2,"c":7}, ...]}
// LSPC:      {"version":1, "demands":[2,0,1], "k":2,
//             "shorts":[{"t":1,"w":1,"c":3}], "longs":[{"s":1,"e":3,"w":1,"c":4}]}
// Solution:  {"version":1, "problem":"partial", "algorithm":"approx", "cost":12,
//             "resources":[{"id":0,"count":2}], "covered":[0,2]}
//            LSPC solutions carry "longs", "shorts" and "coverage" instead of
//            "resources" and "covered". An infeasible cost is the string
//            "infeasible".
//
// Ids are implicit: the position of a job or resource in its array.

#ifndef INTERVALCOVER_IO_HPP_
#define INTERVALCOVER_IO_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "intervalcover/core.hpp"
#include "intervalcover/lspc.hpp"

namespace intervalcover {

/// Parse failure with the JSON path of the offending field and, when it can
/// be located, the 1-based line in the source text.
class ParseError : public InvalidInput {
 public:
  ParseError(std::string path, std::optional<std::size_t> line, const std::string& message);

  const std::string& path() const { return path_; }
  std::optional<std::size_t> line() const { return line_; }

 private:
  std::string path_;
  std::optional<std::size_t> line_;
};

enum class Problem { kPartial, kPrize, kLspc, kFullCover };

const char* to_string(Problem problem);
std::optional<Problem> problem_from_name(std::string_view name);

struct SolutionFile {
  Problem problem = Problem::kPartial;
  std::optional<std::string> algorithm;
  Cost cost = Cost::infeasible();
  ResourceMultiset resources;          // resource counts; long counts for LSPC
  std::vector<int> covered;            // not used for LSPC
  std::vector<int> shorts;             // LSPC only
  std::vector<std::int64_t> coverage;  // LSPC only

  friend bool operator==(const SolutionFile&, const SolutionFile&) = default;
};

Instance parse_instance(std::string_view text);
std::string emit_instance(const Instance& inst);

LspcInstance parse_lspc(std::string_view text);
std::string emit_lspc(const LspcInstance& inst);

SolutionFile parse_solution(std::string_view text);
std::string emit_solution(const SolutionFile& sol);

SolutionFile to_solution_file(Problem problem, const CoverResult& result);
SolutionFile to_solution_file(const LspcSolution& sol);
PartialSolution to_partial_solution(const SolutionFile& file);
LspcSolution to_lspc_solution(const SolutionFile& file);

enum class GenerateProfile { kSingleMountain, kMountainRange, kUniformRandom, kLspcRandom };

const char* to_string(GenerateProfile profile);
std::optional<GenerateProfile> generate_profile_from_name(std::string_view name);

struct GenerateParams {
  int jobs = 6;
  int resources = 4;
  Timeslot T = 10;
  std::int64_t max_w = 3;
  std::int64_t max_c = 10;
  bool penalties = false;
  std::int64_t max_penalty = 10;
  std::optional<std::int64_t> k;  // drawn uniformly from the feasible range when unset
  // LSPC profile only
  int shorts = 4;
  int longs = 4;
  std::int64_t max_demand = 3;
};

/// Deterministic per (seed, profile, params). Every timeslot is reachable by
/// at least one resource.
Instance generate_instance(std::uint64_t seed, GenerateProfile profile, const GenerateParams& params);
LspcInstance generate_lspc(std::uint64_t seed, const GenerateParams& params);

/// File text for the generated instance (LSPC format for kLspcRandom).
std::string generate(std::uint64_t seed, GenerateProfile profile, const GenerateParams& params);

}  // namespace intervalcover

#endif  // INTERVALCOVER_IO_HPP_
