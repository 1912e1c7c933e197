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
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tripath/hilbert.hpp"
#include "tripath/interferometer.hpp"

namespace tripath {

enum class PairKind { Inner, Outer };

/// One of the ten path pairs whose Kirkwood-Dirac value characterizes a state.
struct KDPair {
  Path a;
  Path b;
  PairKind kind;

  friend bool operator==(const KDPair&, const KDPair&) = default;
};

inline constexpr std::size_t kPairCount = 10;

/// Inner pairs (inner path with the outer path of the opposite context)
/// followed by outer pairs (two non-orthogonal outer paths). This order is
/// used for profiles, sign patterns and every export.
inline constexpr std::array<KDPair, kPairCount> kCanonicalPairs{{
    {Path::One, Path::P2, PairKind::Inner},
    {Path::Two, Path::P1, PairKind::Inner},
    {Path::F, Path::Three, PairKind::Inner},
    {Path::S1, Path::D2, PairKind::Inner},
    {Path::S2, Path::D1, PairKind::Inner},
    {Path::One, Path::F, PairKind::Outer},
    {Path::One, Path::S2, PairKind::Outer},
    {Path::Two, Path::F, PairKind::Outer},
    {Path::Two, Path::S1, PairKind::Outer},
    {Path::S1, Path::S2, PairKind::Outer},
}};

/// "(1,P2)" style label.
std::string to_string(const KDPair& pair);
/// Position of (a, b) or (b, a) in kCanonicalPairs.
std::optional<std::size_t> pair_index(Path a, Path b);

/// One path per measurement context (in kContexts order), with every outer
/// path chosen in both of its contexts or in neither: a classical route of
/// the photon through the interferometer.
using Trajectory = std::array<Path, 5>;

/// All non-contextual trajectories.
const std::vector<Trajectory>& noncontextual_trajectories();

/// The unique trajectory that visits both paths of the pair.
const Trajectory& trajectory(const KDPair& pair);

bool visits(const Trajectory& t, Path p);

/// Re(<b|a><a|psi><psi|b>) for real amplitudes. Invariant under sign flips of
/// any argument.
double kd_value(const RayState& psi, const RayState& a, const RayState& b);
double kd_value(const RayState& psi, Path a, Path b,
                const PathSystem& system = default_system());

struct KDProfile {
  RayState state;
  std::optional<std::string> source;
  std::array<double, kPairCount> values{};

  double at(Path a, Path b) const;
};

KDProfile kd_profile(const RayState& psi, const PathSystem& system = default_system());

struct KDTerm {
  KDPair pair;
  double value;
};

/// The three KD terms that add up to P(i) for outer path i: two outer terms
/// first, then the inner term. Throws Error{UnknownPath} for inner paths.
std::array<KDTerm, 3> decompose_outer(const RayState& psi, Path outer,
                                      const PathSystem& system = default_system());

/// P(3) + P(D1) + P(P1) + P(P2) + P(D2). Non-contextual path assignments
/// keep this at or above one.
double inequality_sum(const RayState& psi, const PathSystem& system = default_system());
double violation(const RayState& psi, const PathSystem& system = default_system());

/// Eigen-decomposition of a real symmetric 3x3 matrix.
struct SymmetricEigen {
  std::array<double, 3> values;   // ascending
  std::array<Vec3, 3> vectors;    // vectors[k] belongs to values[k]
};
using Matrix3 = std::array<std::array<double, 3>, 3>;

/// Cyclic Jacobi rotations until the off-diagonal mass drops below 1e-14.
SymmetricEigen jacobi_eigen(const Matrix3& m);

/// Sum of the projectors onto the five inner paths.
Matrix3 inner_path_operator(const PathSystem& system = default_system());

struct MaxViolation {
  RayState state;
  double lambda_min;
  double violation;
};

MaxViolation max_violation(const PathSystem& system = default_system());

/// Magnitude of the most negative KD value reachable for the pair:
/// |<a|b>| (1 - |<a|b>|) / 2. Throws Error{DegeneratePair} when the paths
/// are orthogonal or parallel.
double kd_negative_bound(const RayState& a, const RayState& b);
double kd_negative_bound(Path a, Path b, const PathSystem& system = default_system());

struct KDExtrema {
  RayState max_positive_state;
  double max_positive;
  RayState max_negative_state;
  double max_negative;
};

/// Scans n rays of the great circle through a and b for the extreme values of
/// kd_value(., a, b). Throws Error{DegeneratePair} for orthogonal or parallel
/// pairs.
KDExtrema extremal_kd_on_circle(const RayState& a, const RayState& b, std::size_t n);
KDExtrema extremal_kd_on_circle(Path a, Path b, std::size_t n,
                                const PathSystem& system = default_system());

}  // namespace tripath
