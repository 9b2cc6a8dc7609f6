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


#include "cvqe/instance_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cvqe/error.hpp"

namespace cvqe {
namespace {

using nlohmann::json;

json form_to_json(const QuadraticForm& f) {
  return json{{"A", f.a()}, {"c", f.c()}, {"d", f.d()}};
}

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::kParse, "instance document at " + where + ": " + what);
}

const json& member(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object()) fail(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, "missing field '" + key + "'");
  return *it;
}

double number(const json& v, const std::string& where) {
  if (!v.is_number()) fail(where, "expected a number");
  return v.get<double>();
}

std::vector<double> numbers(const json& v, std::size_t expected, const std::string& where) {
  if (!v.is_array()) fail(where, "expected an array");
  if (v.size() != expected) {
    throw Error(ErrorCode::kDimensionMismatch, "instance document at " + where + ": expected " +
                                                   std::to_string(expected) + " entries, got " +
                                                   std::to_string(v.size()));
  }
  std::vector<double> out;
  out.reserve(expected);
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(number(v[i], where + "/" + std::to_string(i)));
  }
  return out;
}

QuadraticForm form_from_json(const json& v, int n, const std::string& where) {
  auto un = static_cast<std::size_t>(n);
  auto a = numbers(member(v, "A", where), un * un, where + "/A");
  auto c = numbers(member(v, "c", where), un, where + "/c");
  double d = number(member(v, "d", where), where + "/d");
  try {
    return QuadraticForm(n, std::move(a), std::move(c), d);
  } catch (const Error& e) {
    throw Error(e.code(), "instance document at " + where + ": " + e.what());
  }
}

}  // namespace

std::string serialize_instance(const QcqpInstance& inst, const InstanceMeta& meta) {
  json doc;
  doc["n"] = inst.n();
  doc["objective"] = form_to_json(inst.objective());
  doc["constraints"] = json::array();
  for (const auto& f : inst.constraints()) doc["constraints"].push_back(form_to_json(f));
  json m = json::object();
  if (meta.seed) m["seed"] = *meta.seed;
  if (!meta.generator_version.empty()) m["generator-version"] = meta.generator_version;
  doc["meta"] = m;
  return doc.dump(2) + "\n";
}

InstanceDocument parse_instance_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParse, std::string("malformed instance document: ") + e.what());
  }
  const json& nv = member(doc, "n", "/");
  if (!nv.is_number_integer() || nv.get<long long>() < 1 || nv.get<long long>() > 64) {
    fail("/n", "expected an integer in [1, 64]");
  }
  int n = nv.get<int>();
  QuadraticForm objective = form_from_json(member(doc, "objective", "/"), n, "/objective");
  const json& cv = member(doc, "constraints", "/");
  if (!cv.is_array()) fail("/constraints", "expected an array");
  std::vector<QuadraticForm> constraints;
  for (std::size_t m = 0; m < cv.size(); ++m) {
    constraints.push_back(form_from_json(cv[m], n, "/constraints/" + std::to_string(m)));
  }

  InstanceDocument out{QcqpInstance(std::move(objective), std::move(constraints)), {}};
  if (auto it = doc.find("meta"); it != doc.end()) {
    if (!it->is_object()) fail("/meta", "expected an object");
    if (auto s = it->find("seed"); s != it->end()) {
      if (!s->is_number_unsigned() && !s->is_number_integer()) fail("/meta/seed", "expected an integer");
      out.meta.seed = s->get<std::uint64_t>();
    }
    if (auto g = it->find("generator-version"); g != it->end()) {
      if (!g->is_string()) fail("/meta/generator-version", "expected a string");
      out.meta.generator_version = g->get<std::string>();
    }
  }
  return out;
}

QcqpInstance parse_instance(const std::string& text) {
  return parse_instance_document(text).instance;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw Error(ErrorCode::kIo, "write to '" + path + "' failed");
}

}  // namespace cvqe
