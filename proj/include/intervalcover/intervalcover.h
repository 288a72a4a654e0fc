/*
 * Copyright 2026 The intervalcover Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to the intervalcover library.
 *
 * Handles are opaque and owned by the caller; release them with the matching
 * *_free function. Strings returned through char** are heap allocated and
 * released with ic_string_free. Every call returning ic_status leaves a
 * message for ic_last_error() when it fails (per thread).
 */

#ifndef INTERVALCOVER_INTERVALCOVER_H_
#define INTERVALCOVER_INTERVALCOVER_H_

#include <stdint.h>

#if defined(_WIN32)
#  define IC_API __declspec(dllexport)
#else
#  define IC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ic_status {
  IC_OK = 0,
  IC_ERR_ARGUMENT = 1,  /* null pointer or unknown name */
  IC_ERR_PARSE = 2,     /* malformed or invalid file text */
  IC_ERR_INVALID = 3,   /* instance violates a precondition */
  IC_ERR_BUDGET = 4,    /* exact solver refused: enumeration budget exceeded */
  IC_ERR_INTERNAL = 5
} ic_status;

typedef enum ic_problem_kind {
  IC_PARTIAL = 0,
  IC_PRIZE = 1,
  IC_LSPC = 2,
  IC_FULLCOVER = 3
} ic_problem_kind;

typedef enum ic_algorithm {
  IC_APPROX = 0,
  IC_EXACT = 1
} ic_algorithm;

typedef struct ic_problem ic_problem;
typedef struct ic_solution ic_solution;

typedef struct ic_generate_params {
  int32_t jobs;
  int32_t resources;
  int32_t T;
  int64_t max_w;
  int64_t max_c;
  int32_t penalties; /* nonzero: every job gets a penalty */
  int64_t max_penalty;
  int64_t k;         /* negative: drawn by the generator */
  int32_t shorts;    /* lspc-random only */
  int32_t longs;
  int64_t max_demand;
} ic_generate_params;

typedef struct ic_verify_report {
  int32_t feasible;       /* the solution satisfies every constraint */
  int32_t cost_matches;   /* reported cost equals the recomputed cost */
  int32_t has_cost;       /* 0 when the recomputed cost is INFEASIBLE */
  int64_t cost;           /* recomputed cost */
  int32_t violated_slot;  /* 0 when none */
  char reason[256];
} ic_verify_report;

IC_API const char* ic_last_error(void);
IC_API const char* ic_version(void);
IC_API void ic_string_free(char* text);

IC_API const char* ic_problem_kind_name(ic_problem_kind kind);
IC_API ic_status ic_problem_kind_from_name(const char* name, ic_problem_kind* out);

/* LSPC text uses the LSPC file format; the other kinds share the instance
 * format. */
IC_API ic_status ic_problem_parse(ic_problem_kind kind, const char* text, ic_problem** out);
IC_API void ic_problem_free(ic_problem* problem);
IC_API ic_problem_kind ic_problem_get_kind(const ic_problem* problem);
IC_API ic_status ic_problem_to_json(const ic_problem* problem, char** out);

/* budget: "key=value,..." overrides for the exact solvers, or NULL to read
 * INTERVALCOVER_BUDGET. */
IC_API ic_status ic_solve(const ic_problem* problem, ic_algorithm algorithm, const char* budget,
                          ic_solution** out);
IC_API void ic_solution_free(ic_solution* solution);
IC_API ic_problem_kind ic_solution_problem_kind(const ic_solution* solution);
IC_API int32_t ic_solution_feasible(const ic_solution* solution);
/* -1 when INFEASIBLE. */
IC_API int64_t ic_solution_cost(const ic_solution* solution);
/* Proven factor of the producing solver: 1 for exact, 0 when unknown
 * (parsed files). */
IC_API int64_t ic_solution_certified_factor(const ic_solution* solution);
IC_API ic_status ic_solution_to_json(const ic_solution* solution, char** out);
IC_API ic_status ic_solution_parse(const char* text, ic_solution** out);

IC_API ic_status ic_verify(const ic_problem* problem, const ic_solution* solution, ic_verify_report* out);

IC_API void ic_generate_params_default(ic_generate_params* params);
/* profile: single-mountain, mountain-range, uniform-random or lspc-random. */
IC_API ic_status ic_generate(uint64_t seed, const char* profile, const ic_generate_params* params, char** out);

#ifdef __cplusplus
}
#endif

#endif /* INTERVALCOVER_INTERVALCOVER_H_ */
