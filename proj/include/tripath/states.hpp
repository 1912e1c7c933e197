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

#include <array>
#include <string>
#include <vector>

#include "tripath/hilbert.hpp"
#include "tripath/interferometer.hpp"

namespace tripath {

/// A non-path state fixed by two orthogonality conditions.
struct NamedState {
  std::string name;
  RayState ray;
  /// Names of the two states the ray is orthogonal to. Empty for path states.
  std::vector<std::string> defined_by;
};

/// The pentagon corner opposite outer path i: orthogonal to the inner paths
/// of the two contexts that neither contain i nor face it. Throws
/// Error{UnknownPath} for an inner path.
NamedState n_state(Path outer, const PathSystem& system = default_system());

/// Orthogonal to inner path k and to the outer path shared by the two
/// contexts facing k's context. Throws Error{UnknownPath} for an outer path.
NamedState theta_state(Path inner, const PathSystem& system = default_system());

/// The outer path paired with inner path k by theta_state (3-f, D1-S2, P1-2,
/// P2-1, D2-S1).
Path opposite_outer(Path inner);

/// Orthonormal basis {Q(S2,D1), T(2,S1), T(1,f)} for a joint measurement of
/// all five contexts.
std::array<NamedState, 3> joint_basis(const PathSystem& system = default_system());

/// P(i | N_i): detection probability in the path the corner state "should"
/// avoid.
double hardy_value(Path outer, const PathSystem& system = default_system());

/// Coefficients <b_j|psi> in the joint basis.
std::array<double, 3> decompose_in_basis(const RayState& psi,
                                         const PathSystem& system = default_system());

/// The ten path states followed by the five N and five theta states.
std::vector<NamedState> named_states(const PathSystem& system = default_system());

/// Lookup by printed name ("S1", "N_f", "theta_D1", "Q(S2,D1)", ...).
/// Throws Error{UnknownPath}.
NamedState find_named_state(const std::string& name,
                            const PathSystem& system = default_system());

}  // namespace tripath
