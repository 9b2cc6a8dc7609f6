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


#include "cvqe/cvqe.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "cvqe/bench.hpp"
#include "cvqe/error.hpp"
#include "cvqe/generator.hpp"
#include "cvqe/instance_io.hpp"
#include "cvqe/report_io.hpp"

struct cvqe_instance {
  cvqe::InstanceDocument doc;
};

struct cvqe_report {
  cvqe::ReportDocument doc;
  std::vector<cvqe::TraceRow> trace;
  int num_constraints = 0;
};

struct cvqe_bench {
  cvqe::BenchResult result;
};

namespace {

thread_local std::string g_last_error;

cvqe_status status_of(cvqe::ErrorCode code) {
  switch (code) {
    case cvqe::ErrorCode::kInvalidArgument:
      return CVQE_ERR_INVALID_ARGUMENT;
    case cvqe::ErrorCode::kDimensionMismatch:
      return CVQE_ERR_DIMENSION;
    case cvqe::ErrorCode::kParse:
      return CVQE_ERR_PARSE;
    case cvqe::ErrorCode::kLimitExceeded:
      return CVQE_ERR_LIMIT;
    case cvqe::ErrorCode::kGenerationFailed:
      return CVQE_ERR_GENERATION;
    case cvqe::ErrorCode::kIo:
      return CVQE_ERR_IO;
  }
  return CVQE_ERR_INTERNAL;
}

template <class F>
cvqe_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return CVQE_OK;
  } catch (const cvqe::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
  } catch (const std::exception& e) {
    g_last_error = e.what();
  } catch (...) {
    g_last_error = "unknown error";
  }
  return CVQE_ERR_INTERNAL;
}

void require(bool ok, const char* what) {
  if (!ok) throw cvqe::Error(cvqe::ErrorCode::kInvalidArgument, what);
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

size_t copy_values(const std::vector<double>& v, double* buf, size_t len) {
  if (buf) std::memcpy(buf, v.data(), std::min(len, v.size()) * sizeof(double));
  return v.size();
}

cvqe::GradientMode gradient_of(cvqe_gradient g) {
  switch (g) {
    case CVQE_GRADIENT_ADJOINT:
      return cvqe::GradientMode::kAdjoint;
    case CVQE_GRADIENT_PARAMETER_SHIFT:
      return cvqe::GradientMode::kParameterShift;
    case CVQE_GRADIENT_FINITE_DIFFERENCE:
      return cvqe::GradientMode::kFiniteDifference;
  }
  throw cvqe::Error(cvqe::ErrorCode::kInvalidArgument, "unknown gradient mode");
}

void apply_options(const cvqe_solve_options* opts, cvqe::VqeSettings& vqe, cvqe::DualConfig& dual) {
  cvqe_solve_options o;
  cvqe_solve_options_default(&o);
  if (opts) o = *opts;
  dual.mu0 = o.mu0;
  dual.alpha = o.alpha;
  dual.tol = o.tol;
  dual.max_outer = o.max_outer;
  dual.shots = o.shots;
  if (o.inner_start != CVQE_INNER_FIXED && o.inner_start != CVQE_INNER_WARM) {
    throw cvqe::Error(cvqe::ErrorCode::kInvalidArgument, "unknown inner start");
  }
  dual.inner_start = o.inner_start == CVQE_INNER_WARM ? cvqe::InnerStart::kWarm : cvqe::InnerStart::kFixed;
  vqe.restarts = o.restarts;
  vqe.max_iterations = o.max_iterations;
  vqe.convergence_tol = o.convergence_tol;
  vqe.gradient_mode = gradient_of(o.gradient);
  vqe.validate();
  dual.validate();
}

}  // namespace

extern "C" {

const char* cvqe_version(void) { return "0.1.0"; }

const char* cvqe_last_error(void) { return g_last_error.c_str(); }

void cvqe_string_free(char* s) { std::free(s); }

void cvqe_solve_options_default(cvqe_solve_options* opts) {
  if (!opts) return;
  const cvqe::DualConfig dual;
  const cvqe::VqeSettings vqe = cvqe::default_inner_settings();
  opts->mu0 = dual.mu0;
  opts->alpha = dual.alpha;
  opts->tol = dual.tol;
  opts->max_outer = dual.max_outer;
  opts->shots = dual.shots;
  opts->inner_start = dual.inner_start == cvqe::InnerStart::kWarm ? CVQE_INNER_WARM : CVQE_INNER_FIXED;
  opts->restarts = vqe.restarts;
  opts->max_iterations = vqe.max_iterations;
  opts->convergence_tol = vqe.convergence_tol;
  opts->gradient = CVQE_GRADIENT_ADJOINT;
}

cvqe_status cvqe_instance_generate(int n, int m, uint64_t seed, int ensure_active, cvqe_instance** out) {
  return guarded([&] {
    require(out != nullptr, "null output handle");
    auto inst = cvqe::gen_instance(n, m, seed, ensure_active != 0);
    *out = new cvqe_instance{{std::move(inst), {seed, cvqe::kGeneratorVersion}}};
  });
}

cvqe_status cvqe_instance_parse(const char* text, cvqe_instance** out) {
  return guarded([&] {
    require(text != nullptr && out != nullptr, "null argument");
    *out = new cvqe_instance{cvqe::parse_instance_document(text)};
  });
}

cvqe_status cvqe_instance_load(const char* path, cvqe_instance** out) {
  return guarded([&] {
    require(path != nullptr && out != nullptr, "null argument");
    *out = new cvqe_instance{cvqe::parse_instance_document(cvqe::read_text_file(path))};
  });
}

cvqe_status cvqe_instance_serialize(const cvqe_instance* inst, char** out) {
  return guarded([&] {
    require(inst != nullptr && out != nullptr, "null argument");
    *out = copy_string(cvqe::serialize_instance(inst->doc.instance, inst->doc.meta));
  });
}

cvqe_status cvqe_instance_save(const cvqe_instance* inst, const char* path) {
  return guarded([&] {
    require(inst != nullptr && path != nullptr, "null argument");
    cvqe::write_text_file(path, cvqe::serialize_instance(inst->doc.instance, inst->doc.meta));
  });
}

int cvqe_instance_qubits(const cvqe_instance* inst) { return inst ? inst->doc.instance.n() : 0; }

int cvqe_instance_constraints(const cvqe_instance* inst) {
  return inst ? inst->doc.instance.num_constraints() : 0;
}

int cvqe_instance_seed(const cvqe_instance* inst, uint64_t* seed) {
  if (!inst || !inst->doc.meta.seed) return 0;
  if (seed) *seed = *inst->doc.meta.seed;
  return 1;
}

cvqe_status cvqe_instance_stochastic_feasible(const cvqe_instance* inst, int* out) {
  return guarded([&] {
    require(inst != nullptr && out != nullptr, "null argument");
    *out = cvqe::stochastic_feasible(inst->doc.instance) ? 1 : 0;
  });
}

void cvqe_instance_free(cvqe_instance* inst) { delete inst; }

cvqe_status cvqe_solve(const cvqe_instance* inst, const cvqe_solve_options* opts, uint64_t seed,
                       cvqe_report** out) {
  return guarded([&] {
    require(inst != nullptr && out != nullptr, "null argument");
    cvqe::VqeSettings vqe = cvqe::default_inner_settings();
    cvqe::DualConfig dual;
    apply_options(opts, vqe, dual);
    auto rep = cvqe::solve(inst->doc.instance, vqe, dual, seed);
    auto* r = new cvqe_report{cvqe::report_from_solve(rep), std::move(rep.trace),
                              inst->doc.instance.num_constraints()};
    *out = r;
  });
}

cvqe_status cvqe_oracle_solve(const cvqe_instance* inst, cvqe_oracle mode, cvqe_report** out) {
  return guarded([&] {
    require(inst != nullptr && out != nullptr, "null argument");
    const auto& q = inst->doc.instance;
    cvqe::ReportDocument doc;
    if (mode == CVQE_ORACLE_LP) {
      doc = cvqe::report_from_lp(q, cvqe::lp_solve(q));
    } else if (mode == CVQE_ORACLE_BRUTE) {
      doc = cvqe::report_from_brute(q, cvqe::brute_force_solve(q));
    } else {
      throw cvqe::Error(cvqe::ErrorCode::kInvalidArgument, "unknown oracle mode");
    }
    *out = new cvqe_report{std::move(doc), {}, q.num_constraints()};
  });
}

cvqe_status cvqe_report_json(const cvqe_report* rep, char** out) {
  return guarded([&] {
    require(rep != nullptr && out != nullptr, "null argument");
    *out = copy_string(cvqe::serialize_report(rep->doc));
  });
}

cvqe_status cvqe_report_trace_csv(const cvqe_report* rep, char** out) {
  return guarded([&] {
    require(rep != nullptr && out != nullptr, "null argument");
    *out = copy_string(cvqe::trace_csv(rep->trace, rep->num_constraints));
  });
}

int cvqe_report_converged(const cvqe_report* rep) { return rep && rep->doc.converged ? 1 : 0; }

const char* cvqe_report_status(const cvqe_report* rep) { return rep ? rep->doc.status.c_str() : ""; }

double cvqe_report_objective(const cvqe_report* rep) { return rep ? rep->doc.objective : 0.0; }

size_t cvqe_report_pmf(const cvqe_report* rep, double* buf, size_t len) {
  return rep ? copy_values(rep->doc.pmf, buf, len) : 0;
}

size_t cvqe_report_lambda(const cvqe_report* rep, double* buf, size_t len) {
  return rep ? copy_values(rep->doc.lambda, buf, len) : 0;
}

size_t cvqe_report_constraint_values(const cvqe_report* rep, double* buf, size_t len) {
  return rep ? copy_values(rep->doc.constraint_values, buf, len) : 0;
}

void cvqe_report_free(cvqe_report* rep) { delete rep; }

cvqe_status cvqe_bench_run(const char* suite, uint64_t seed, const cvqe_solve_options* opts, int count,
                           cvqe_bench** out) {
  return guarded([&] {
    require(suite != nullptr && out != nullptr, "null argument");
    cvqe::BenchSpec spec;
    spec.suite = cvqe::bench_suite_from_string(suite);
    spec.seed = seed;
    apply_options(opts, spec.vqe, spec.dual);
    if (count > 0) spec.count = count;
    *out = new cvqe_bench{cvqe::run_bench(spec)};
  });
}

cvqe_status cvqe_bench_markdown(const cvqe_bench* bench, char** out) {
  return guarded([&] {
    require(bench != nullptr && out != nullptr, "null argument");
    *out = copy_string(cvqe::bench_markdown(bench->result));
  });
}

cvqe_status cvqe_bench_csv(const cvqe_bench* bench, char** out) {
  return guarded([&] {
    require(bench != nullptr && out != nullptr, "null argument");
    *out = copy_string(cvqe::bench_csv(bench->result));
  });
}

int cvqe_bench_instances(const cvqe_bench* bench) {
  return bench ? static_cast<int>(bench->result.rows.size()) : 0;
}

int cvqe_bench_stochastic_optimal(const cvqe_bench* bench) {
  return bench ? bench->result.stochastic_optimal_count : 0;
}

int cvqe_bench_mode_feasible(const cvqe_bench* bench) {
  return bench ? bench->result.mode_feasible_count : 0;
}

int cvqe_bench_converged(const cvqe_bench* bench) { return bench ? bench->result.converged_count : 0; }

void cvqe_bench_free(cvqe_bench* bench) { delete bench; }

}  // extern "C"
