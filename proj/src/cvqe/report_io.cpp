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


#include "cvqe/report_io.hpp"

#include <algorithm>
#include <cstdio>

#include <json.hpp>

#include "cvqe/error.hpp"

namespace cvqe {
namespace {

using nlohmann::json;

struct Summary {
  std::vector<double> values;  // objective, then constraints
  std::optional<BitVector> mode;
  bool mode_feasible = false;
};

Summary summarize(const QcqpInstance& inst, const std::vector<double>& pmf) {
  Summary s;
  if (pmf.empty()) return s;
  auto eval = [&](const QuadraticForm& f) {
    double acc = 0.0;
    for (std::size_t k = 0; k < pmf.size(); ++k) {
      if (pmf[k] != 0.0) acc += pmf[k] * eval_quadratic_at(f, k);
    }
    return acc;
  };
  s.values.push_back(eval(inst.objective()));
  for (const auto& f : inst.constraints()) s.values.push_back(eval(f));
  auto k = static_cast<std::uint64_t>(std::max_element(pmf.begin(), pmf.end()) - pmf.begin());
  s.mode = BitVector::from_index(k, inst.n());
  s.mode_feasible = std::all_of(inst.constraints().begin(), inst.constraints().end(),
                                [&](const QuadraticForm& f) { return eval_quadratic_at(f, k) <= 0.0; });
  return s;
}

template <class T>
T get_field(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw Error(ErrorCode::kParse, std::string("report document: missing field '") + key + "'");
  try {
    return it->get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("report document at /") + key + ": " + e.what());
  }
}

BitVector parse_bits(const std::string& s) {
  std::vector<std::uint8_t> bits;
  for (char ch : s) {
    if (ch != '0' && ch != '1') throw Error(ErrorCode::kParse, "report document at /mode_bitstring: not a bitstring");
    bits.push_back(static_cast<std::uint8_t>(ch - '0'));
  }
  return BitVector(std::move(bits));
}

}  // namespace

std::string bitstring(const BitVector& b) {
  std::string s;
  for (auto bit : b.bits()) s.push_back(bit ? '1' : '0');
  return s;
}

ReportDocument report_from_solve(const SolveReport& rep) {
  ReportDocument r;
  r.solver = "quantum";
  r.status = rep.converged ? "converged" : "not-converged";
  r.n = rep.n;
  r.pmf = rep.pmf;
  r.lambda = rep.lambda;
  r.objective = rep.objective;
  r.constraint_values = rep.constraint_values;
  r.converged = rep.converged;
  r.mode_bitstring = rep.mode_bitstring;
  r.mode_deterministic_feasible = rep.mode_deterministic_feasible;
  r.theta = rep.theta;
  r.outer_iterations = static_cast<int>(rep.trace.size());
  return r;
}

ReportDocument report_from_lp(const QcqpInstance& inst, const LpSolution& lp) {
  ReportDocument r;
  r.solver = "lp";
  r.status = to_string(lp.status);
  r.n = inst.n();
  r.converged = lp.status == LpStatus::kOptimal;
  if (!r.converged) return r;
  r.pmf = lp.pmf;
  r.lambda = lp.duals;
  Summary s = summarize(inst, lp.pmf);
  r.objective = lp.objective;
  r.constraint_values.assign(s.values.begin() + 1, s.values.end());
  r.mode_bitstring = s.mode;
  r.mode_deterministic_feasible = s.mode_feasible;
  return r;
}

ReportDocument report_from_brute(const QcqpInstance& inst, const BruteForceSolution& bf) {
  ReportDocument r;
  r.solver = "brute";
  r.n = inst.n();
  r.feasible_count = bf.feasible_count;
  r.converged = bf.best.has_value();
  r.status = r.converged ? "optimal" : "infeasible";
  if (!r.converged) return r;
  r.pmf.assign(std::size_t{1} << inst.n(), 0.0);
  r.pmf[bf.best->index()] = 1.0;
  Summary s = summarize(inst, r.pmf);
  r.objective = *bf.best_value;
  r.constraint_values.assign(s.values.begin() + 1, s.values.end());
  r.mode_bitstring = bf.best;
  r.mode_deterministic_feasible = true;
  return r;
}

std::string serialize_report(const ReportDocument& r) {
  json doc;
  doc["solver"] = r.solver;
  doc["status"] = r.status;
  doc["n"] = r.n;
  doc["pmf"] = r.pmf;
  doc["lambda"] = r.lambda;
  doc["objective"] = r.objective;
  doc["constraint_values"] = r.constraint_values;
  doc["converged"] = r.converged;
  doc["mode_bitstring"] = r.mode_bitstring ? json(bitstring(*r.mode_bitstring)) : json(nullptr);
  doc["mode_deterministic_feasible"] = r.mode_deterministic_feasible;
  doc["theta"] = r.theta;
  doc["outer_iterations"] = r.outer_iterations;
  doc["feasible_count"] = r.feasible_count ? json(*r.feasible_count) : json(nullptr);
  return doc.dump(2) + "\n";
}

ReportDocument parse_report(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParse, std::string("malformed report document: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::kParse, "report document: expected an object");
  ReportDocument r;
  r.solver = get_field<std::string>(doc, "solver");
  r.status = get_field<std::string>(doc, "status");
  r.n = get_field<int>(doc, "n");
  r.pmf = get_field<std::vector<double>>(doc, "pmf");
  r.lambda = get_field<std::vector<double>>(doc, "lambda");
  r.objective = get_field<double>(doc, "objective");
  r.constraint_values = get_field<std::vector<double>>(doc, "constraint_values");
  r.converged = get_field<bool>(doc, "converged");
  if (auto m = get_field<json>(doc, "mode_bitstring"); !m.is_null()) {
    r.mode_bitstring = parse_bits(m.get<std::string>());
  }
  r.mode_deterministic_feasible = get_field<bool>(doc, "mode_deterministic_feasible");
  r.theta = get_field<std::vector<double>>(doc, "theta");
  r.outer_iterations = get_field<int>(doc, "outer_iterations");
  if (auto f = get_field<json>(doc, "feasible_count"); !f.is_null()) {
    r.feasible_count = f.get<long long>();
  }
  return r;
}

std::string format_g6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string trace_csv(const std::vector<TraceRow>& trace, int num_constraints) {
  std::string out = "iter";
  for (int m = 1; m <= num_constraints; ++m) out += ",lambda_" + std::to_string(m);
  out += ",F0";
  for (int m = 1; m <= num_constraints; ++m) out += ",F" + std::to_string(m);
  out += ",inner_evals\n";
  for (const auto& row : trace) {
    out += std::to_string(row.iter);
    for (double l : row.lambda) out += "," + format_g6(l);
    out += "," + format_g6(row.objective);
    for (double f : row.constraint_values) out += "," + format_g6(f);
    out += "," + std::to_string(row.inner_evaluations) + "\n";
  }
  return out;
}

}  // namespace cvqe
