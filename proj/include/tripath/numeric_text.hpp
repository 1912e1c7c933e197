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

#include <string_view>

#include "tripath/hilbert.hpp"

namespace tripath {

/// Parses a real number written as a decimal ("0.25", "-1e-3"), a ratio
/// ("1/3"), or with square roots on either side ("1/√3", "sqrt(2)/2").
/// Failures throw Error{Parse} naming `field`.
double parse_real(std::string_view text, std::string_view field);

/// Three comma-separated reals, e.g. "3,1,1" or "1/√3,1/√3,1/√3".
Vec3 parse_vec3(std::string_view text, std::string_view field);

}  // namespace tripath
