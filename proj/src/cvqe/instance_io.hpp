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


// Instance documents: JSON with n, objective {A, c, d}, constraints, meta.

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "cvqe/problem.hpp"

namespace cvqe {

struct InstanceMeta {
  std::optional<std::uint64_t> seed;
  std::string generator_version;
};

struct InstanceDocument {
  QcqpInstance instance;
  InstanceMeta meta;
};

std::string serialize_instance(const QcqpInstance& inst, const InstanceMeta& meta = {});
InstanceDocument parse_instance_document(const std::string& text);
QcqpInstance parse_instance(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace cvqe
