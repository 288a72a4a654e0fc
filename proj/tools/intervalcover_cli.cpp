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

// Command-line front end. Talks to the library only through the C API.
//
// Exit codes: 0 success / feasible, 2 INFEASIBLE, 1 any error.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "intervalcover/intervalcover.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInfeasible = 2;

struct CliError {
  std::string message;
};

struct ProblemDeleter {
  void operator()(ic_problem* p) const { ic_problem_free(p); }
};
struct SolutionDeleter {
  void operator()(ic_solution* s) const { ic_solution_free(s); }
};
struct StringDeleter {
  void operator()(char* s) const { ic_string_free(s); }
};
using ProblemPtr = std::unique_ptr<ic_problem, ProblemDeleter>;
using SolutionPtr = std::unique_ptr<ic_solution, SolutionDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

void check(ic_status status, const std::string& what) {
  if (status != IC_OK) throw CliError{what + ": " + ic_last_error()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{"cannot open " + path};
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CliError{"cannot write " + path};
  out << text;
}

ic_problem_kind kind_from(const std::string& name) {
  ic_problem_kind kind = IC_PARTIAL;
  check(ic_problem_kind_from_name(name.c_str(), &kind), "problem");
  return kind;
}

ProblemPtr load_problem(ic_problem_kind kind, const std::string& text, const std::string& path) {
  ic_problem* raw = nullptr;
  check(ic_problem_parse(kind, text.c_str(), &raw), path);
  return ProblemPtr(raw);
}

SolutionPtr solve(const ic_problem* problem, ic_algorithm algorithm) {
  ic_solution* raw = nullptr;
  check(ic_solve(problem, algorithm, nullptr, &raw), algorithm == IC_EXACT ? "exact solve" : "approx solve");
  return SolutionPtr(raw);
}

std::string cost_text(const ic_solution* sol) {
  return ic_solution_feasible(sol) ? std::to_string(ic_solution_cost(sol)) : "\"infeasible\"";
}

// Exact fraction p/q in lowest terms plus a 6-digit decimal rendering.
struct Ratio {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Ratio of(std::int64_t num, std::int64_t den) {
    if (den == 0) return num == 0 ? Ratio{1, 1} : Ratio{1, 0};
    const std::int64_t g = std::gcd(num, den);
    return {num / g, den / g};
  }
  bool infinite() const { return den == 0; }
  bool operator<(const Ratio& o) const {
    if (infinite() || o.infinite()) return !infinite() && o.infinite();
    return static_cast<__int128>(num) * o.den < static_cast<__int128>(o.num) * den;
  }
  std::string fraction() const { return infinite() ? "inf" : std::to_string(num) + "/" + std::to_string(den); }
  std::string decimal() const {
    if (infinite()) return "inf";
    const std::int64_t whole = num / den;
    const auto frac = static_cast<std::int64_t>(static_cast<__int128>(num % den) * 1000000 / den);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%06lld", static_cast<long long>(frac));
    return std::to_string(whole) + "." + buf;
  }
};

int run_solve(const std::string& problem_name, const std::string& algorithm_name, const std::string& input,
              const std::string& output) {
  const ic_problem_kind kind = kind_from(problem_name);
  const ic_algorithm algorithm = algorithm_name == "exact" ? IC_EXACT : IC_APPROX;
  const ProblemPtr problem = load_problem(kind, read_file(input), input);
  const SolutionPtr sol = solve(problem.get(), algorithm);

  char* raw = nullptr;
  check(ic_solution_to_json(sol.get(), &raw), "emit solution");
  const StringPtr text(raw);
  if (!output.empty()) write_text(output, text.get());

  std::cout << "{\"problem\":\"" << problem_name << "\",\"algorithm\":\"" << algorithm_name
            << "\",\"feasible\":" << (ic_solution_feasible(sol.get()) ? "true" : "false")
            << ",\"cost\":" << cost_text(sol.get()) << ",\"certified_factor\":" << ic_solution_certified_factor(sol.get());
  if (algorithm == IC_EXACT) std::cout << ",\"optimal\":true";
  std::cout << "}\n";
  return ic_solution_feasible(sol.get()) ? kExitOk : kExitInfeasible;
}

int run_verify(const std::string& input, const std::string& solution_path) {
  ic_solution* raw_sol = nullptr;
  check(ic_solution_parse(read_file(solution_path).c_str(), &raw_sol), solution_path);
  const SolutionPtr sol(raw_sol);
  const ic_problem_kind kind = ic_solution_problem_kind(sol.get());
  const ProblemPtr problem = load_problem(kind, read_file(input), input);

  ic_verify_report report{};
  check(ic_verify(problem.get(), sol.get(), &report), "verify");
  const bool ok = report.feasible && report.cost_matches;
  std::cout << "{\"problem\":\"" << ic_problem_kind_name(kind) << "\",\"feasible\":" << (ok ? "true" : "false")
            << ",\"cost_matches\":" << (report.cost_matches ? "true" : "false")
            << ",\"recomputed_cost\":" << (report.has_cost ? std::to_string(report.cost) : "\"infeasible\"");
  if (report.violated_slot) std::cout << ",\"violated_slot\":" << report.violated_slot;
  if (report.reason[0]) {
    std::string reason = report.reason;
    std::string escaped;
    for (char c : reason) {
      if (c == '"' || c == '\\') escaped += '\\';
      escaped += c;
    }
    std::cout << ",\"reason\":\"" << escaped << "\"";
  }
  std::cout << "}\n";
  return ok ? kExitOk : kExitInfeasible;
}

std::pair<std::uint64_t, std::uint64_t> parse_seeds(const std::string& text) {
  const std::size_t dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const std::uint64_t s = std::stoull(text);
      return {s, s};
    }
    const std::uint64_t a = std::stoull(text.substr(0, dots));
    const std::uint64_t b = std::stoull(text.substr(dots + 2));
    if (b < a) throw CliError{"empty seed range " + text};
    return {a, b};
  } catch (const std::logic_error&) {
    throw CliError{"bad seed range " + text + " (expected a..b)"};
  }
}

int run_ratio(const std::string& seeds, const std::string& profile, std::optional<std::string> generator,
              ic_generate_params params) {
  const ic_problem_kind kind = kind_from(profile);
  if (kind == IC_FULLCOVER) throw CliError{"ratio needs an approximate problem: partial, prize or lspc"};
  if (!generator) generator = kind == IC_LSPC ? "lspc-random" : "uniform-random";
  if (kind == IC_PRIZE) params.penalties = 1;
  const auto [first, last] = parse_seeds(seeds);

  bool failed = false;
  std::optional<Ratio> worst;
  std::int64_t worst_bound = 0;
  std::cout << "seed approx exact ratio decimal bound\n";
  for (std::uint64_t seed = first;; ++seed) {
    char* raw = nullptr;
    check(ic_generate(seed, generator->c_str(), &params, &raw), "generate");
    const StringPtr text(raw);
    const ProblemPtr problem = load_problem(kind, text.get(), "seed " + std::to_string(seed));
    const SolutionPtr approx = solve(problem.get(), IC_APPROX);
    const SolutionPtr exact = solve(problem.get(), IC_EXACT);
    const std::int64_t bound = ic_solution_certified_factor(approx.get());

    ic_verify_report report{};
    check(ic_verify(problem.get(), approx.get(), &report), "verify");
    const bool approx_ok = ic_solution_feasible(approx.get()) != 0;
    const bool exact_ok = ic_solution_feasible(exact.get()) != 0;
    std::string fraction = "-";
    std::string decimal = "-";
    if (approx_ok != exact_ok) {
      failed = true;
      std::cerr << "seed " << seed << ": approx and exact disagree on feasibility\n";
    } else if (approx_ok) {
      if (!report.feasible || !report.cost_matches) {
        failed = true;
        std::cerr << "seed " << seed << ": approx output fails verification: " << report.reason << "\n";
      }
      const std::int64_t a = ic_solution_cost(approx.get());
      const std::int64_t e = ic_solution_cost(exact.get());
      const Ratio r = Ratio::of(a, e);
      fraction = r.fraction();
      decimal = r.decimal();
      if (a < e || Ratio::of(bound, 1) < r) {
        failed = true;
        std::cerr << "seed " << seed << ": ratio " << fraction << " outside [1, " << bound << "]\n";
      }
      if (!worst || *worst < r) {
        worst = r;
        worst_bound = bound;
      }
    }
    std::cout << seed << ' ' << cost_text(approx.get()) << ' ' << cost_text(exact.get()) << ' ' << fraction << ' '
              << decimal << ' ' << bound << "\n";
    if (seed == last) break;
  }
  if (worst) {
    std::cout << "max_ratio " << worst->fraction() << ' ' << worst->decimal() << " bound " << worst_bound << "\n";
  } else {
    std::cout << "max_ratio - - bound -\n";
  }
  return failed ? kExitError : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"intervalcover: interval resource cover solvers"};
  app.require_subcommand(1);

  std::string problem = "partial";
  std::string algorithm = "approx";
  std::string input;
  std::string output;
  auto* solve_cmd = app.add_subcommand("solve", "solve an instance and write a solution file");
  solve_cmd->add_option("--problem", problem)->check(CLI::IsMember({"partial", "prize", "lspc", "fullcover"}));
  solve_cmd->add_option("--algorithm", algorithm)->check(CLI::IsMember({"approx", "exact"}));
  solve_cmd->add_option("--input", input)->required();
  solve_cmd->add_option("--output", output, "solution file (omit to skip)");

  std::string solution;
  auto* verify_cmd = app.add_subcommand("verify", "check a solution file against an instance");
  verify_cmd->add_option("--input", input)->required();
  verify_cmd->add_option("--solution", solution)->required();

  ic_generate_params params;
  ic_generate_params_default(&params);
  std::string seeds;
  std::string ratio_profile = "partial";
  std::optional<std::string> generator;
  auto* ratio_cmd = app.add_subcommand("ratio", "compare approximate and exact costs over generated instances");
  ratio_cmd->add_option("--seeds", seeds, "a..b")->required();
  ratio_cmd->add_option("--profile", ratio_profile)->check(CLI::IsMember({"partial", "prize", "lspc"}));
  ratio_cmd->add_option("--generator", generator)
      ->check(CLI::IsMember({"single-mountain", "mountain-range", "uniform-random", "lspc-random"}));

  std::uint64_t seed = 0;
  std::string gen_profile = "uniform-random";
  bool penalties = false;
  std::int64_t k = -1;
  auto* gen_cmd = app.add_subcommand("generate", "write a random instance");
  gen_cmd->add_option("--seed", seed);
  gen_cmd->add_option("--profile", gen_profile)
      ->check(CLI::IsMember({"single-mountain", "mountain-range", "uniform-random", "lspc-random"}));
  gen_cmd->add_option("--output", output);
  gen_cmd->add_flag("--penalties", penalties);

  for (CLI::App* cmd : {ratio_cmd, gen_cmd}) {
    cmd->add_option("--jobs", params.jobs);
    cmd->add_option("--resources", params.resources);
    cmd->add_option("--T", params.T);
    cmd->add_option("--max-w", params.max_w);
    cmd->add_option("--max-c", params.max_c);
    cmd->add_option("--max-penalty", params.max_penalty);
    cmd->add_option("--k", k, "omit to draw k");
    cmd->add_option("--shorts", params.shorts);
    cmd->add_option("--longs", params.longs);
    cmd->add_option("--max-demand", params.max_demand);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  params.k = k;
  try {
    if (*solve_cmd) return run_solve(problem, algorithm, input, output);
    if (*verify_cmd) return run_verify(input, solution);
    if (*ratio_cmd) return run_ratio(seeds, ratio_profile, generator, params);
    if (*gen_cmd) {
      params.penalties = penalties ? 1 : 0;
      char* raw = nullptr;
      check(ic_generate(seed, gen_profile.c_str(), &params, &raw), "generate");
      const StringPtr text(raw);
      write_text(output, text.get());
      return kExitOk;
    }
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kExitError;
  }
  return kExitError;
}
