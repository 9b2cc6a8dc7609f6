// Copyright 2026 The cvqe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


/* C interface to the cvqe solver library.
 *
 * Objects are opaque handles released with the matching *_free call.
 * Every fallible call returns a cvqe_status; on failure the thread's last
 * error message is available from cvqe_last_error(). Strings returned
 * through char** are owned by the caller and released with cvqe_string_free.
 */

#ifndef CVQE_CVQE_H_
#define CVQE_CVQE_H_

#include <stddef.h>
#include <stdint.h>

#if defined(CVQE_BUILDING_LIBRARY)
#define CVQE_API __attribute__((visibility("default")))
#else
#define CVQE_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cvqe_status {
  CVQE_OK = 0,
  CVQE_ERR_INVALID_ARGUMENT = 1,
  CVQE_ERR_DIMENSION = 2,
  CVQE_ERR_PARSE = 3,
  CVQE_ERR_LIMIT = 4,
  CVQE_ERR_GENERATION = 5,
  CVQE_ERR_IO = 6,
  CVQE_ERR_INTERNAL = 99
} cvqe_status;

typedef enum cvqe_gradient {
  CVQE_GRADIENT_ADJOINT = 0,
  CVQE_GRADIENT_PARAMETER_SHIFT = 1,
  CVQE_GRADIENT_FINITE_DIFFERENCE = 2
} cvqe_gradient;

typedef enum cvqe_inner_start {
  CVQE_INNER_FIXED = 0,
  CVQE_INNER_WARM = 1
} cvqe_inner_start;

typedef enum cvqe_oracle {
  CVQE_ORACLE_LP = 0,
  CVQE_ORACLE_BRUTE = 1
} cvqe_oracle;

typedef struct cvqe_instance cvqe_instance;
typedef struct cvqe_report cvqe_report;
typedef struct cvqe_bench cvqe_bench;

typedef struct cvqe_solve_options {
  /* dual loop */
  double mu0;
  double alpha;
  double tol;
  int max_outer;
  int shots; /* 0 = exact expectations */
  cvqe_inner_start inner_start;
  /* inner VQE */
  int restarts;
  int max_iterations;
  double convergence_tol;
  cvqe_gradient gradient;
} cvqe_solve_options;

CVQE_API const char* cvqe_version(void);
CVQE_API const char* cvqe_last_error(void);
CVQE_API void cvqe_string_free(char* s);

CVQE_API void cvqe_solve_options_default(cvqe_solve_options* opts);

/* Instances */
CVQE_API cvqe_status cvqe_instance_generate(int n, int m, uint64_t seed, int ensure_active,
                                            cvqe_instance** out);
CVQE_API cvqe_status cvqe_instance_parse(const char* text, cvqe_instance** out);
CVQE_API cvqe_status cvqe_instance_load(const char* path, cvqe_instance** out);
CVQE_API cvqe_status cvqe_instance_serialize(const cvqe_instance* inst, char** out);
CVQE_API cvqe_status cvqe_instance_save(const cvqe_instance* inst, const char* path);
CVQE_API int cvqe_instance_qubits(const cvqe_instance* inst);
CVQE_API int cvqe_instance_constraints(const cvqe_instance* inst);
/* Returns 1 and fills *seed when the document carries one, else 0. */
CVQE_API int cvqe_instance_seed(const cvqe_instance* inst, uint64_t* seed);
CVQE_API cvqe_status cvqe_instance_stochastic_feasible(const cvqe_instance* inst, int* out);
CVQE_API void cvqe_instance_free(cvqe_instance* inst);

/* Solving */
CVQE_API cvqe_status cvqe_solve(const cvqe_instance* inst, const cvqe_solve_options* opts,
                                uint64_t seed, cvqe_report** out);
CVQE_API cvqe_status cvqe_oracle_solve(const cvqe_instance* inst, cvqe_oracle mode,
                                       cvqe_report** out);

/* Reports. Oracle reports carry no trace; their CSV is the header only. */
CVQE_API cvqe_status cvqe_report_json(const cvqe_report* rep, char** out);
CVQE_API cvqe_status cvqe_report_trace_csv(const cvqe_report* rep, char** out);
CVQE_API int cvqe_report_converged(const cvqe_report* rep);
/* "converged", "not-converged", "optimal", "infeasible" or "unbounded". */
CVQE_API const char* cvqe_report_status(const cvqe_report* rep);
CVQE_API double cvqe_report_objective(const cvqe_report* rep);
CVQE_API size_t cvqe_report_pmf(const cvqe_report* rep, double* buf, size_t len);
CVQE_API size_t cvqe_report_lambda(const cvqe_report* rep, double* buf, size_t len);
CVQE_API size_t cvqe_report_constraint_values(const cvqe_report* rep, double* buf, size_t len);
CVQE_API void cvqe_report_free(cvqe_report* rep);

/* Benchmarks. suite is "table1" or "feas30"; count <= 0 keeps the suite size. */
CVQE_API cvqe_status cvqe_bench_run(const char* suite, uint64_t seed, const cvqe_solve_options* opts,
                                    int count, cvqe_bench** out);
CVQE_API cvqe_status cvqe_bench_markdown(const cvqe_bench* bench, char** out);
CVQE_API cvqe_status cvqe_bench_csv(const cvqe_bench* bench, char** out);
CVQE_API int cvqe_bench_instances(const cvqe_bench* bench);
CVQE_API int cvqe_bench_stochastic_optimal(const cvqe_bench* bench);
CVQE_API int cvqe_bench_mode_feasible(const cvqe_bench* bench);
CVQE_API int cvqe_bench_converged(const cvqe_bench* bench);
CVQE_API void cvqe_bench_free(cvqe_bench* bench);

#ifdef __cplusplus
}
#endif

#endif /* CVQE_CVQE_H_ */
