// Copyright 2026 The dgsp Authors
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

#ifndef DGSP_IO_H
#define DGSP_IO_H

#include <string>

#include "json.hpp"

#include "dgsp/gsp_algorithms.h"
#include "dgsp/hsp_instance.h"

namespace dgsp {

using Json = nlohmann::ordered_json;

/// Lowercase hex, zero-padded to ceil(m/4) digits.
std::string hex_word(std::uint64_t value, int m);
std::uint64_t parse_hex_word(const std::string& text);

/// { "n", "t", "m", "k", "seed", "s_basis": [bitstrings], "f_table": [hex] }
/// f_table index is the integer value of x with x_1 most significant.
Json instance_to_json(const HspInstance& inst);
/// Throws UsageError on schema problems. The promise itself is not checked.
HspInstance instance_from_json(const Json& j);

void save_instance(const HspInstance& inst, const std::string& path);
HspInstance load_instance(const std::string& path);

Json trace_to_json(const SolverTrace& trace);

}  // namespace dgsp

#endif
