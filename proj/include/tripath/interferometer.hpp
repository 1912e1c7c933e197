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
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "tripath/hilbert.hpp"

namespace tripath {

/// The ten paths of the five-stage interferometer. Outer paths (1, 2, S1, f,
/// S2) belong to two measurement contexts each, inner paths (3, D1, P1, P2,
/// D2) to one.
enum class Path : std::uint8_t { One, Two, Three, S1, D1, F, P1, P2, S2, D2 };

inline constexpr std::size_t kPathCount = 10;

inline constexpr std::array<Path, kPathCount> kAllPaths{
    Path::One, Path::Two, Path::Three, Path::S1, Path::D1,
    Path::F,   Path::P1,  Path::P2,    Path::S2, Path::D2};
inline constexpr std::array<Path, 5> kOuterPaths{Path::One, Path::Two, Path::S1,
                                                 Path::F, Path::S2};
inline constexpr std::array<Path, 5> kInnerPaths{Path::Three, Path::D1, Path::P1,
                                                 Path::P2, Path::D2};

constexpr std::size_t index(Path p) { return static_cast<std::size_t>(p); }
bool is_outer(Path p);
std::string_view to_string(Path p);
/// Accepts the printed names ("1", "S1", "f", ...). Throws Error{UnknownPath}.
Path parse_path(std::string_view name);
std::optional<Path> try_parse_path(std::string_view name);

/// Per-path values, indexed by Path.
using PathValues = std::array<double, kPathCount>;

/// Beam-splitter reflectivities in stage order. The index names the path that
/// runs parallel to the splitter.
struct InterferometerSpec {
  double r1 = 1.0 / 2.0;
  double rS1 = 1.0 / 3.0;
  double rf = 1.0 / 4.0;
  double rS2 = 1.0 / 3.0;
  double r2 = 1.0 / 2.0;

  /// Throws Error{InvalidReflectivity} unless every value lies in (0, 1).
  void validate() const;
};

/// Reads "key = value" lines (keys r1, rS1, rf, rS2, r2; '#' starts a
/// comment). Values may be decimals or "p/q". Missing keys keep defaults.
InterferometerSpec parse_spec(std::string_view text);

/// Three mutually orthogonal paths measured together.
struct Context {
  std::array<Path, 3> paths;
  bool contains(Path p) const;
};

inline constexpr std::array<Context, 5> kContexts{{
    {{Path::One, Path::Two, Path::Three}},
    {{Path::One, Path::S1, Path::D1}},
    {{Path::S1, Path::F, Path::P1}},
    {{Path::F, Path::S2, Path::P2}},
    {{Path::S2, Path::Two, Path::D2}},
}};

/// The inner path of the context, i.e. its only member that is not shared.
Path inner_path_of(const Context& c);

class PathSystem {
 public:
  const RayState& ray(Path p) const { return rays_[index(p)]; }
  const std::array<RayState, kPathCount>& rays() const { return rays_; }
  /// The unit vector exactly as the cascade produced it, before the global
  /// sign is canonicalized. Relative signs between these are what make
  /// consecutive inner paths overlap negatively.
  const Vec3& cascade_vector(Path p) const { return cascade_[index(p)]; }
  /// Output ports of the last stage, in the order of |1>, |2>, |3>.
  const std::array<RayState, 3>& outputs() const { return outputs_; }
  const InterferometerSpec& spec() const { return spec_; }

 private:
  friend PathSystem build(const InterferometerSpec& spec);
  InterferometerSpec spec_;
  std::array<RayState, kPathCount> rays_{};
  std::array<Vec3, kPathCount> cascade_{};
  std::array<RayState, 3> outputs_{};
};

/// Runs the beam-splitter cascade. Each stage maps (outer, mid) to
///   outer' = sqrt(R) outer + sqrt(1-R) mid,
///   mid'   = sqrt(1-R) outer - sqrt(R) mid.
PathSystem build(const InterferometerSpec& spec);

/// The system for the default reflectivities (1/2, 1/3, 1/4, 1/3, 1/2).
const PathSystem& default_system();

/// True when the output ports reproduce |1>, |2>, |3> up to sign within tol.
/// A tol below 1e-12 is raised to 1e-12 to absorb rounding.
bool verify_closure(const PathSystem& system, double tol);

/// P(a) = <a|psi>^2 for all ten paths.
PathValues probabilities(const RayState& psi, const PathSystem& system);

}  // namespace tripath
