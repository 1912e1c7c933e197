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

#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "oracle.hpp"
#include "tripath/error.hpp"
#include "tripath/hilbert.hpp"

using namespace tripath;

namespace {

bool has_kind(ErrorKind kind, const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind() == kind;
  }
  return false;
}

}  // namespace

TEST_CASE("normalize scales to unit length and fixes the sign") {
  const RayState r = normalize({-2.0, 0.0, 0.0});
  CHECK(r.c1() == doctest::Approx(1.0));
  CHECK(r.c2() == 0.0);
  CHECK_FALSE(std::signbit(r.c2()));

  const RayState s = normalize({0.0, -3.0, 4.0});
  CHECK(s.c2() == doctest::Approx(0.6));
  CHECK(s.c3() == doctest::Approx(-0.8));

  const RayState t = normalize({1e-13, -1.0, 1.0});
  CHECK(t.c2() > 0.0);
}

TEST_CASE("normalize rejects the zero vector") {
  CHECK(has_kind(ErrorKind::ZeroVector, [] { (void)normalize({0.0, 0.0, 0.0}); }));
  CHECK(has_kind(ErrorKind::ZeroVector, [] { (void)normalize({1e-14, 0.0, 0.0}); }));
}

TEST_CASE("normalize is idempotent and sign invariant") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    const Vec3 v = oracle::random_unit(rng);
    const RayState a = normalize(v);
    const RayState b = normalize(a.coeffs());
    const RayState c = normalize({-3 * v[0], -3 * v[1], -3 * v[2]});
    for (int k = 0; k < 3; ++k) {
      CHECK(a[k] == doctest::Approx(b[k]).epsilon(1e-15));
      CHECK(a[k] == doctest::Approx(c[k]).epsilon(1e-15));
    }
    CHECK(norm(a.coeffs()) == doctest::Approx(1.0).epsilon(1e-15));
  }
}

TEST_CASE("inner is symmetric") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 200; ++i) {
    const RayState a = normalize(oracle::random_unit(rng));
    const RayState b = normalize(oracle::random_unit(rng));
    CHECK(inner(a, b) == doctest::Approx(inner(b, a)).epsilon(1e-15));
  }
}

TEST_CASE("orthogonal_to_pair examples") {
  const auto& v = oracle::path_vectors();
  const RayState nf = orthogonal_to_pair(normalize(v.at("D1")), normalize(v.at("D2")));
  CHECK(oracle::same_ray(nf.coeffs(), oracle::scaled({1, 1, 1}, std::sqrt(3.0)), 1e-12));

  const RayState z = orthogonal_to_pair(normalize({1, 0, 0}), normalize({0, 1, 0}));
  CHECK(oracle::same_ray(z.coeffs(), {0, 0, 1}, 1e-15));

  const RayState td2 = orthogonal_to_pair(normalize(v.at("D2")), normalize(v.at("S1")));
  CHECK(oracle::same_ray(td2.coeffs(), oracle::scaled({1, -1, 1}, std::sqrt(3.0)), 1e-12));
}

TEST_CASE("orthogonal_to_pair is orthogonal to random pairs") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 1000; ++i) {
    const RayState a = normalize(oracle::random_unit(rng));
    const RayState b = normalize(oracle::random_unit(rng));
    if (std::abs(std::abs(inner(a, b)) - 1.0) < 1e-6) continue;
    const RayState c = orthogonal_to_pair(a, b);
    CHECK(std::abs(inner(a, c)) < 1e-12);
    CHECK(std::abs(inner(b, c)) < 1e-12);
  }
}

TEST_CASE("orthogonal_to_pair rejects parallel rays") {
  const RayState a = normalize({1, 2, 3});
  CHECK(has_kind(ErrorKind::DegeneratePair, [&] { (void)orthogonal_to_pair(a, a); }));
  const RayState b = normalize({-1, -2, -3});
  CHECK(has_kind(ErrorKind::DegeneratePair, [&] { (void)orthogonal_to_pair(a, b); }));
}

TEST_CASE("hemisphere_project examples") {
  const SpherePoint pole = hemisphere_project(normalize({1, 0, 0}));
  CHECK(pole.u == 0.0);
  CHECK(pole.v == 0.0);

  const SpherePoint p = hemisphere_project(normalize({-1, -1, -1}));
  CHECK(p.u == doctest::Approx(1 / std::sqrt(3.0)));
  CHECK(p.v == doctest::Approx(1 / std::sqrt(3.0)));

  // Equator: c2 decides the representative.
  const SpherePoint e = hemisphere_project(normalize({0, 1, -1}));
  CHECK(e.u == doctest::Approx(1 / std::sqrt(2.0)));
  CHECK(e.v == doctest::Approx(-1 / std::sqrt(2.0)));
  const SpherePoint e2 = hemisphere_project(normalize({0, -1, 1}));
  CHECK(e2.u == doctest::Approx(e.u));
  CHECK(e2.v == doctest::Approx(e.v));
}

TEST_CASE("hemisphere lift inverts project") {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 1000; ++i) {
    const RayState r = normalize(oracle::random_unit(rng));
    const RayState back = hemisphere_lift(hemisphere_project(r));
    CHECK(back.same_ray(r, 1e-9));
  }
}

TEST_CASE("great_circle samples the orthogonal circle") {
  const auto c3 = great_circle(normalize({0, 0, 1}), 4);
  REQUIRE(c3.size() == 4);
  for (const auto& r : c3) CHECK(std::abs(r.c3()) < 1e-15);

  const RayState f = normalize(oracle::vec("f"));
  for (const auto& r : great_circle(f, 97)) CHECK(std::abs(inner(r, f)) < 1e-14);

  // Distinct rays spaced pi/n apart.
  const auto c = great_circle(f, 8);
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    CHECK(std::abs(inner(c[i], c[i + 1])) == doctest::Approx(std::cos(M_PI / 8)));
  }

  CHECK_THROWS_AS((void)great_circle(f, 1), std::invalid_argument);
}

TEST_CASE("the theta_3 and f circles cross at theta_3") {
  // The ray on the 3-circle closest to the f-circle is their intersection.
  const RayState three = normalize({0, 0, 1});
  const RayState f = normalize(oracle::vec("f"));
  double best = 1.0;
  RayState hit;
  for (const auto& r : great_circle(three, 3600)) {
    const double d = std::abs(inner(r, f));
    if (d < best) {
      best = d;
      hit = r;
    }
  }
  CHECK(best < 1e-12);
  CHECK(hit.same_ray(normalize({1, -1, 0}), 1e-12));
}
