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

#include "intervalcover/intervalcover.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <string>
#include <variant>

#include "intervalcover/driver.hpp"
#include "intervalcover/fullcover.hpp"
#include "intervalcover/io.hpp"
#include "intervalcover/lspc.hpp"
#include "intervalcover/oracle.hpp"

namespace ic = intervalcover;

struct ic_problem {
  ic_problem_kind kind;
  std::variant<ic::Instance, ic::LspcInstance> value;
};

struct ic_solution {
  ic::SolutionFile file;
  std::int64_t certified_factor = 0;
};

namespace {

thread_local std::string last_error;

ic_status fail(ic_status status, const std::string& message) {
  last_error = message;
  return status;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
ic_status guarded(Fn&& fn) {
  try {
    last_error.clear();
    return fn();
  } catch (const ic::ParseError& e) {
    return fail(IC_ERR_PARSE, e.what());
  } catch (const ic::InvalidInput& e) {
    return fail(IC_ERR_INVALID, e.what());
  } catch (const ic::BudgetExceeded& e) {
    return fail(IC_ERR_BUDGET, e.what());
  } catch (const std::exception& e) {
    return fail(IC_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(IC_ERR_INTERNAL, "unknown exception");
  }
}

char* copy_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out) std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

ic::Problem to_problem(ic_problem_kind kind) {
  switch (kind) {
    case IC_PARTIAL: return ic::Problem::kPartial;
    case IC_PRIZE: return ic::Problem::kPrize;
    case IC_LSPC: return ic::Problem::kLspc;
    case IC_FULLCOVER: return ic::Problem::kFullCover;
  }
  return ic::Problem::kPartial;
}

bool valid_kind(int kind) { return kind >= IC_PARTIAL && kind <= IC_FULLCOVER; }

ic_solution* wrap(ic::SolutionFile file, std::int64_t factor) {
  auto* sol = new ic_solution;
  sol->file = std::move(file);
  sol->certified_factor = factor;
  return sol;
}

ic_solution* solve_instance(const ic::Instance& inst, ic_problem_kind kind, ic_algorithm algorithm,
                            const ic::OracleBudget& budget) {
  const ic::Problem problem = to_problem(kind);
  switch (kind) {
    case IC_PARTIAL:
      if (algorithm == IC_EXACT) return wrap(ic::to_solution_file(problem, ic::oracle_partial(inst, budget)), 1);
      {
        const ic::PartialResult result = ic::solve_partial(inst);
        return wrap(ic::to_solution_file(problem, result.result), result.certified_factor);
      }
    case IC_PRIZE:
      if (algorithm == IC_EXACT) return wrap(ic::to_solution_file(problem, ic::oracle_prize(inst, budget)), 1);
      return wrap(ic::to_solution_file(problem, ic::solve_prize(inst, static_cast<std::size_t>(budget.smfc_s_types))),
                  1);
    case IC_FULLCOVER: {
      // The full-cover solver is exact, so both algorithms coincide.
      inst.validate();
      const ic::FullCoverResult cover = ic::full_cover(ic::job_profile(inst.jobs, inst.T), inst.resources);
      ic::CoverResult result;
      result.cost = cover.cost;
      if (cover.cost.is_finite()) {
        result.solution.multiset = cover.multiset;
        for (const ic::Job& j : inst.jobs) result.solution.covered.push_back(j.id);
      }
      return wrap(ic::to_solution_file(problem, result), 1);
    }
    case IC_LSPC: break;
  }
  throw ic::InvalidInput("problem kind does not match instance");
}

}  // namespace

extern "C" {

const char* ic_last_error(void) { return last_error.c_str(); }

const char* ic_version(void) { return "0.1.0"; }

void ic_string_free(char* text) { std::free(text); }

const char* ic_problem_kind_name(ic_problem_kind kind) {
  return valid_kind(kind) ? ic::to_string(to_problem(kind)) : "unknown";
}

ic_status ic_problem_kind_from_name(const char* name, ic_problem_kind* out) {
  if (!name || !out) return fail(IC_ERR_ARGUMENT, "null argument");
  const auto problem = ic::problem_from_name(name);
  if (!problem) return fail(IC_ERR_ARGUMENT, std::string("unknown problem: ") + name);
  *out = static_cast<ic_problem_kind>(*problem);
  return IC_OK;
}

ic_status ic_problem_parse(ic_problem_kind kind, const char* text, ic_problem** out) {
  if (!text || !out) return fail(IC_ERR_ARGUMENT, "null argument");
  if (!valid_kind(kind)) return fail(IC_ERR_ARGUMENT, "unknown problem kind");
  *out = nullptr;
  return guarded([&] {
    auto problem = std::make_unique<ic_problem>();
    problem->kind = kind;
    if (kind == IC_LSPC) {
      problem->value = ic::parse_lspc(text);
    } else {
      problem->value = ic::parse_instance(text);
    }
    *out = problem.release();
    return IC_OK;
  });
}

void ic_problem_free(ic_problem* problem) { delete problem; }

ic_problem_kind ic_problem_get_kind(const ic_problem* problem) { return problem ? problem->kind : IC_PARTIAL; }

ic_status ic_problem_to_json(const ic_problem* problem, char** out) {
  if (!problem || !out) return fail(IC_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    const std::string text = problem->kind == IC_LSPC ? ic::emit_lspc(std::get<ic::LspcInstance>(problem->value))
                                                       : ic::emit_instance(std::get<ic::Instance>(problem->value));
    *out = copy_string(text);
    return IC_OK;
  });
}

ic_status ic_solve(const ic_problem* problem, ic_algorithm algorithm, const char* budget, ic_solution** out) {
  if (!problem || !out) return fail(IC_ERR_ARGUMENT, "null argument");
  if (algorithm != IC_APPROX && algorithm != IC_EXACT) return fail(IC_ERR_ARGUMENT, "unknown algorithm");
  *out = nullptr;
  return guarded([&] {
    const ic::OracleBudget limits = budget ? ic::OracleBudget::parse(budget) : ic::OracleBudget::from_env();
    ic_solution* sol = nullptr;
    if (problem->kind == IC_LSPC) {
      const auto& inst = std::get<ic::LspcInstance>(problem->value);
      if (algorithm == IC_EXACT) {
        sol = wrap(ic::to_solution_file(ic::oracle_lspc(inst, limits)), 1);
      } else {
        sol = wrap(ic::to_solution_file(ic::solve_lspc(inst)), 16);
      }
    } else {
      sol = solve_instance(std::get<ic::Instance>(problem->value), problem->kind, algorithm, limits);
    }
    sol->file.algorithm = algorithm == IC_EXACT ? "exact" : "approx";
    *out = sol;
    return IC_OK;
  });
}

void ic_solution_free(ic_solution* solution) { delete solution; }

ic_problem_kind ic_solution_problem_kind(const ic_solution* solution) {
  return solution ? static_cast<ic_problem_kind>(solution->file.problem) : IC_PARTIAL;
}

int32_t ic_solution_feasible(const ic_solution* solution) {
  return solution && solution->file.cost.is_finite() ? 1 : 0;
}

int64_t ic_solution_cost(const ic_solution* solution) {
  return solution && solution->file.cost.is_finite() ? solution->file.cost.value() : -1;
}

int64_t ic_solution_certified_factor(const ic_solution* solution) {
  return solution ? solution->certified_factor : 0;
}

ic_status ic_solution_to_json(const ic_solution* solution, char** out) {
  if (!solution || !out) return fail(IC_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *out = copy_string(ic::emit_solution(solution->file));
    return IC_OK;
  });
}

ic_status ic_solution_parse(const char* text, ic_solution** out) {
  if (!text || !out) return fail(IC_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = wrap(ic::parse_solution(text), 0);
    return IC_OK;
  });
}

ic_status ic_verify(const ic_problem* problem, const ic_solution* solution, ic_verify_report* out) {
  if (!problem || !solution || !out) return fail(IC_ERR_ARGUMENT, "null argument");
  if (to_problem(problem->kind) != solution->file.problem) {
    return fail(IC_ERR_ARGUMENT, std::string("solution is for problem ") + ic::to_string(solution->file.problem) +
                                     ", instance is " + ic_problem_kind_name(problem->kind));
  }
  return guarded([&] {
    *out = ic_verify_report{};
    const ic::Cost reported = solution->file.cost;
    bool feasible = false;
    ic::Cost cost = ic::Cost::infeasible();
    std::optional<ic::Timeslot> slot;
    std::string reason;
    if (reported.is_infeasible()) {
      reason = "solution reports INFEASIBLE";
    } else if (problem->kind == IC_LSPC) {
      const ic::LspcReport report =
          ic::verify_lspc(std::get<ic::LspcInstance>(problem->value), ic::to_lspc_solution(solution->file));
      feasible = report.feasible;
      cost = report.cost;
      slot = report.slot;
      reason = report.reason;
    } else {
      const auto& inst = std::get<ic::Instance>(problem->value);
      const ic::PartialSolution sol = ic::to_partial_solution(solution->file);
      ic::VerificationReport report;
      if (problem->kind == IC_PARTIAL) {
        report = ic::verify_partial(inst, sol);
      } else if (problem->kind == IC_PRIZE) {
        report = ic::verify_prize(inst, sol);
      } else {
        report = ic::verify_full(inst, sol);
      }
      feasible = report.feasible;
      cost = report.cost;
      slot = report.violated_slot;
      reason = report.reason;
    }
    // An INFEASIBLE claim cannot be checked without solving, so it is not a
    // cost mismatch.
    out->cost_matches = reported.is_infeasible() || cost == reported ? 1 : 0;
    if (feasible && !out->cost_matches) {
      reason = "reported cost " + reported.to_string() + " differs from recomputed cost " + cost.to_string();
    }
    out->feasible = feasible ? 1 : 0;
    out->has_cost = cost.is_finite() ? 1 : 0;
    out->cost = cost.is_finite() ? cost.value() : -1;
    out->violated_slot = slot ? *slot : 0;
    std::strncpy(out->reason, reason.c_str(), sizeof(out->reason) - 1);
    return IC_OK;
  });
}

void ic_generate_params_default(ic_generate_params* params) {
  if (!params) return;
  const ic::GenerateParams d;
  params->jobs = d.jobs;
  params->resources = d.resources;
  params->T = d.T;
  params->max_w = d.max_w;
  params->max_c = d.max_c;
  params->penalties = d.penalties ? 1 : 0;
  params->max_penalty = d.max_penalty;
  params->k = -1;
  params->shorts = d.shorts;
  params->longs = d.longs;
  params->max_demand = d.max_demand;
}

ic_status ic_generate(uint64_t seed, const char* profile, const ic_generate_params* params, char** out) {
  if (!profile || !params || !out) return fail(IC_ERR_ARGUMENT, "null argument");
  const auto kind = ic::generate_profile_from_name(profile);
  if (!kind) return fail(IC_ERR_ARGUMENT, std::string("unknown profile: ") + profile);
  return guarded([&] {
    ic::GenerateParams p;
    p.jobs = params->jobs;
    p.resources = params->resources;
    p.T = params->T;
    p.max_w = params->max_w;
    p.max_c = params->max_c;
    p.penalties = params->penalties != 0;
    p.max_penalty = params->max_penalty;
    if (params->k >= 0) p.k = params->k;
    p.shorts = params->shorts;
    p.longs = params->longs;
    p.max_demand = params->max_demand;
    *out = copy_string(ic::generate(seed, *kind, p));
    return IC_OK;
  });
}

}  // extern "C"
