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

#include "tripath/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "tripath/error.hpp"

namespace tripath {

double dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

bool RayState::same_ray(const RayState& other, double tol) const {
  double plus = 0.0;
  double minus = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    plus = std::max(plus, std::abs(c_[i] - other.c_[i]));
    minus = std::max(minus, std::abs(c_[i] + other.c_[i]));
  }
  return std::min(plus, minus) <= tol;
}

RayState normalize(const Vec3& v) {
  const double n = norm(v);
  if (!(n > kZeroNorm)) {
    throw Error(ErrorKind::ZeroVector, "cannot normalize a vector of norm " +
                                           std::to_string(n));
  }
  Vec3 c{v[0] / n, v[1] / n, v[2] / n};
  for (double x : c) {
    if (std::abs(x) > kSignThreshold) {
      if (x < 0.0) {
        for (double& y : c) y = -y;
      }
      break;
    }
  }
  // Avoid -0.0 leaking into printed output.
  for (double& y : c) {
    if (y == 0.0) y = 0.0;
  }
  return RayState(c);
}

double inner(const RayState& a, const RayState& b) {
  return dot(a.coeffs(), b.coeffs());
}

RayState orthogonal_to_pair(const RayState& a, const RayState& b) {
  if (std::abs(inner(a, b)) >= 1.0 - kParallelTol) {
    throw Error(ErrorKind::DegeneratePair,
                "rays are parallel; no unique orthogonal ray");
  }
  return normalize(cross(a.coeffs(), b.coeffs()));
}

SpherePoint hemisphere_project(const RayState& r) {
  // The canonical representative already lies on the c1 >= 0 side; on the
  // equator the sign of c2 (then c3) decides.
  const double s = r.c1() < 0.0 ? -1.0 : 1.0;
  return {s * r.c2(), s * r.c3()};
}

RayState hemisphere_lift(const SpherePoint& p) {
  const double rr = p.u * p.u + p.v * p.v;
  const double c1 = rr >= 1.0 ? 0.0 : std::sqrt(1.0 - rr);
  return normalize({c1, p.u, p.v});
}

std::vector<RayState> great_circle(const RayState& axis, std::size_t n) {
  if (n < 2) throw std::invalid_argument("great_circle needs n >= 2");
  const Vec3& a = axis.coeffs();
  // Pick the basis vector least aligned with the axis to seed the frame.
  std::size_t k = 0;
  for (std::size_t i = 1; i < 3; ++i) {
    if (std::abs(a[i]) < std::abs(a[k])) k = i;
  }
  Vec3 seed{0.0, 0.0, 0.0};
  seed[k] = 1.0;
  Vec3 e1 = cross(a, seed);
  const double n1 = norm(e1);
  for (double& x : e1) x /= n1;
  const Vec3 e2 = cross(a, e1);

  std::vector<RayState> out;
  out.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double t = std::numbers::pi * static_cast<double>(j) /
                     static_cast<double>(n);
    const double c = std::cos(t);
    const double s = std::sin(t);
    out.push_back(normalize({c * e1[0] + s * e2[0], c * e1[1] + s * e2[1],
                             c * e1[2] + s * e2[2]}));
  }
  return out;
}

}  // namespace tripath
