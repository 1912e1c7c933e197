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
#include <vector>

namespace tripath {

using Vec3 = std::array<double, 3>;

/// Norm below which a vector is treated as zero.
inline constexpr double kZeroNorm = 1e-12;
/// Coefficients with magnitude at or below this are skipped when choosing the
/// canonical sign.
inline constexpr double kSignThreshold = 1e-12;
/// |<a|b>| above 1 - kParallelTol means the pair spans no plane.
inline constexpr double kParallelTol = 1e-9;

double dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);
double norm(const Vec3& v);

/// A unit vector of the real three-dimensional Hilbert space, identified up to
/// global sign. The stored representative has its first non-negligible
/// coefficient positive, so two equal rays compare equal component-wise.
class RayState {
 public:
  /// The basis state |1>.
  RayState() : c_{1.0, 0.0, 0.0} {}

  double c1() const { return c_[0]; }
  double c2() const { return c_[1]; }
  double c3() const { return c_[2]; }
  const Vec3& coeffs() const { return c_; }
  double operator[](std::size_t i) const { return c_[i]; }

  /// True when the rays agree up to global sign within tol (max-norm).
  bool same_ray(const RayState& other, double tol) const;

 private:
  explicit RayState(const Vec3& c) : c_(c) {}
  friend RayState normalize(const Vec3& v);

  Vec3 c_;
};

/// Projection of the c1 >= 0 hemisphere onto the (|2>, |3>) plane.
struct SpherePoint {
  double u = 0.0;
  double v = 0.0;
};

/// Throws Error{ZeroVector} when |v| <= kZeroNorm.
RayState normalize(const Vec3& v);

double inner(const RayState& a, const RayState& b);

/// The ray orthogonal to both a and b. Throws Error{DegeneratePair} when the
/// two rays are parallel.
RayState orthogonal_to_pair(const RayState& a, const RayState& b);

SpherePoint hemisphere_project(const RayState& r);

/// Inverse of hemisphere_project on the closed unit disk.
RayState hemisphere_lift(const SpherePoint& p);

/// n rays orthogonal to axis, spaced by pi/n in angle. Half a turn covers
/// every ray on the circle once.
std::vector<RayState> great_circle(const RayState& axis, std::size_t n);

}  // namespace tripath
