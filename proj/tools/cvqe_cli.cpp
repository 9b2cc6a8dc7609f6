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


// Command-line front end. Talks to the solver only through the C interface.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "cvqe/cvqe.h"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNotConverged = 2;
constexpr int kExitInfeasible = 3;

struct Freer {
  void operator()(char* s) const { cvqe_string_free(s); }
  void operator()(cvqe_instance* p) const { cvqe_instance_free(p); }
  void operator()(cvqe_report* p) const { cvqe_report_free(p); }
  void operator()(cvqe_bench* p) const { cvqe_bench_free(p); }
};

template <class T>
using Owned = std::unique_ptr<T, Freer>;

struct CliError {
  std::string message;
};

void check(cvqe_status st, const std::string& context) {
  if (st != CVQE_OK) throw CliError{context + ": " + cvqe_last_error()};
}

std::string take(char* s) {
  Owned<char> owned(s);
  return owned ? std::string(owned.get()) : std::string();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) throw CliError{"cannot write '" + path.string() + "'"};
}

fs::path prepare_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw CliError{"cannot create '" + dir + "': " + ec.message()};
  return fs::path(dir);
}

Owned<cvqe_instance> load(const std::string& path) {
  cvqe_instance* raw = nullptr;
  check(cvqe_instance_load(path.c_str(), &raw), path);
  return Owned<cvqe_instance>(raw);
}

struct SolveFlags {
  cvqe_solve_options opts{};
  std::string inner_start = "fixed";
  std::string gradient = "adjoint";

  SolveFlags() { cvqe_solve_options_default(&opts); }

  void add_to(CLI::App* app) {
    app->add_option("--mu0", opts.mu0, "dual step numerator")->capture_default_str();
    app->add_option("--alpha", opts.alpha, "dual step offset")->capture_default_str();
    app->add_option("--tol", opts.tol, "stop when the multiplier change is at most this")->capture_default_str();
    app->add_option("--max-outer", opts.max_outer, "outer iteration cap")->capture_default_str();
    app->add_option("--shots", opts.shots, "0 = exact expectations")->capture_default_str();
    app->add_option("--restarts", opts.restarts, "inner restarts")->capture_default_str();
    app->add_option("--max-iterations", opts.max_iterations, "inner descent iterations")->capture_default_str();
    app->add_option("--inner-start", inner_start, "fixed | warm")
        ->check(CLI::IsMember({"fixed", "warm"}))
        ->capture_default_str();
    app->add_option("--gradient", gradient, "adjoint | parameter-shift | finite-difference")
        ->check(CLI::IsMember({"adjoint", "parameter-shift", "finite-difference"}))
        ->capture_default_str();
  }

  const cvqe_solve_options* resolve() {
    opts.inner_start = inner_start == "warm" ? CVQE_INNER_WARM : CVQE_INNER_FIXED;
    static const std::map<std::string, cvqe_gradient> modes = {
        {"adjoint", CVQE_GRADIENT_ADJOINT},
        {"parameter-shift", CVQE_GRADIENT_PARAMETER_SHIFT},
        {"finite-difference", CVQE_GRADIENT_FINITE_DIFFERENCE}};
    opts.gradient = modes.at(gradient);
    return &opts;
  }
};

int cmd_gen(int n, int m, std::uint64_t seed, int count, bool active, const std::string& out_dir) {
  const fs::path dir = prepare_dir(out_dir);
  for (int i = 0; i < count; ++i) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(i);
    cvqe_instance* raw = nullptr;
    check(cvqe_instance_generate(n, m, s, active ? 1 : 0, &raw), "gen seed " + std::to_string(s));
    Owned<cvqe_instance> inst(raw);
    const fs::path path = dir / ("instance_" + std::to_string(s) + ".json");
    check(cvqe_instance_save(inst.get(), path.string().c_str()), path.string());
    std::cout << path.string() << "\tn=" << n << "\tm=" << m << "\tseed=" << s << "\n";
  }
  return kExitOk;
}

int cmd_solve(const std::string& path, SolveFlags& flags, const std::uint64_t* seed_flag,
              const std::string& out_dir) {
  auto inst = load(path);
  std::uint64_t seed = 1;
  if (seed_flag) {
    seed = *seed_flag;
  } else {
    cvqe_instance_seed(inst.get(), &seed);
  }
  cvqe_report* raw = nullptr;
  check(cvqe_solve(inst.get(), flags.resolve(), seed, &raw), "solve");
  Owned<cvqe_report> rep(raw);

  char* text = nullptr;
  check(cvqe_report_json(rep.get(), &text), "report");
  const std::string json = take(text);
  check(cvqe_report_trace_csv(rep.get(), &text), "trace");
  const std::string csv = take(text);

  const fs::path dir = prepare_dir(out_dir);
  const std::string stem = fs::path(path).stem().string();
  write_file(dir / (stem + ".report.json"), json);
  write_file(dir / (stem + ".trace.csv"), csv);

  std::printf("%s objective=%.6g status=%s\n", stem.c_str(), cvqe_report_objective(rep.get()),
              cvqe_report_status(rep.get()));
  return cvqe_report_converged(rep.get()) ? kExitOk : kExitNotConverged;
}

int cmd_oracle(const std::string& path, const std::string& mode, const std::string& out_dir) {
  auto inst = load(path);
  cvqe_report* raw = nullptr;
  check(cvqe_oracle_solve(inst.get(), mode == "brute" ? CVQE_ORACLE_BRUTE : CVQE_ORACLE_LP, &raw), "oracle");
  Owned<cvqe_report> rep(raw);
  char* text = nullptr;
  check(cvqe_report_json(rep.get(), &text), "report");
  const fs::path dir = prepare_dir(out_dir);
  const std::string stem = fs::path(path).stem().string();
  write_file(dir / (stem + "." + mode + ".json"), take(text));

  std::printf("%s %s status=%s", stem.c_str(), mode.c_str(), cvqe_report_status(rep.get()));
  if (cvqe_report_converged(rep.get())) std::printf(" objective=%.6g", cvqe_report_objective(rep.get()));
  std::printf("\n");
  return cvqe_report_converged(rep.get()) ? kExitOk : kExitInfeasible;
}

int cmd_bench(const std::string& suite, std::uint64_t seed, int count, SolveFlags& flags, const std::string& out_dir) {
  cvqe_bench* raw = nullptr;
  check(cvqe_bench_run(suite.c_str(), seed, flags.resolve(), count, &raw), "bench " + suite);
  Owned<cvqe_bench> bench(raw);
  char* text = nullptr;
  check(cvqe_bench_markdown(bench.get(), &text), "bench markdown");
  const std::string md = take(text);
  check(cvqe_bench_csv(bench.get(), &text), "bench csv");
  const std::string csv = take(text);
  const fs::path dir = prepare_dir(out_dir);
  write_file(dir / (suite + ".md"), md);
  write_file(dir / (suite + ".csv"), csv);
  std::cout << md;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constrained variational quantum eigensolver for binary QCQPs"};
  app.require_subcommand(1);

  int n = 2;
  int m = 1;
  std::uint64_t seed = 1;
  int count = 1;
  std::string out_dir = ".";
  bool no_active = false;

  auto* gen = app.add_subcommand("gen", "generate random feasible instances");
  gen->add_option("-n,--qubits", n, "number of binary variables")->required();
  gen->add_option("-m,--constraints", m, "number of quadratic constraints")->capture_default_str();
  gen->add_option("--seed", seed, "seed of the first instance; instance i uses seed + i")->capture_default_str();
  gen->add_option("--count", count, "number of instances")->capture_default_str();
  gen->add_option("--out", out_dir, "output directory")->capture_default_str();
  gen->add_flag("--no-active", no_active, "skip the active-constraint adjustment");

  std::string instance_path;
  SolveFlags solve_flags;
  auto* solve = app.add_subcommand("solve", "run the dual-decomposition solver on an instance");
  solve->add_option("instance", instance_path, "instance document")->required()->check(CLI::ExistingFile);
  auto* solve_seed = solve->add_option("--seed", seed, "solver seed (defaults to the instance's seed)");
  solve->add_option("--out", out_dir, "output directory")->capture_default_str();
  solve_flags.add_to(solve);

  std::string mode = "lp";
  auto* oracle = app.add_subcommand("oracle", "solve an instance with an exact reference method");
  oracle->add_option("instance", instance_path, "instance document")->required()->check(CLI::ExistingFile);
  oracle->add_option("--mode", mode, "lp | brute")->check(CLI::IsMember({"lp", "brute"}))->capture_default_str();
  oracle->add_option("--out", out_dir, "output directory")->capture_default_str();

  std::string suite;
  int bench_count = 0;
  SolveFlags bench_flags;
  auto* bench = app.add_subcommand("bench", "run a benchmark suite");
  bench->add_option("suite", suite, "table1 | feas30")->required()->check(CLI::IsMember({"table1", "feas30"}));
  bench->add_option("--seed", seed, "seed of the first instance")->capture_default_str();
  bench->add_option("--count", bench_count, "override the suite's instance count");
  bench->add_option("--out", out_dir, "output directory")->capture_default_str();
  bench_flags.add_to(bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*gen) return cmd_gen(n, m, seed, count, !no_active, out_dir);
    if (*solve) return cmd_solve(instance_path, solve_flags, solve_seed->count() ? &seed : nullptr, out_dir);
    if (*oracle) return cmd_oracle(instance_path, mode, out_dir);
    if (*bench) return cmd_bench(suite, seed, bench_count, bench_flags, out_dir);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
