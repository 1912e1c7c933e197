// Copyright 2026 The tripath Authors
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

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "tripath/classify.hpp"
#include "tripath/kd.hpp"
#include "tripath/states.hpp"

namespace tripath {

/// Shortest decimal that reads back to the same double.
std::string format_real(double x);

/// RFC 4180 field quoting.
std::string csv_field(std::string_view s);

/// Joins already-escaped fields with commas and terminates the record with CRLF.
std::string csv_record(const std::vector<std::string>& fields);

/// Header: state,c1,c2,c3 then the ten canonical pairs (inner first).
std::string kd_profiles_csv(const std::vector<KDProfile>& profiles);

nlohmann::json to_json(const RayState& r);
nlohmann::json to_json(const KDProfile& profile);
nlohmann::json to_json(const NamedState& state);
/// { state: [c1,c2,c3], pattern: "...", labels: [...] }
nlohmann::json to_json(const RayState& psi, const ClassificationResult& result);

}  // namespace tripath
