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

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <string>

#include "oracle.hpp"
#include "tripath/classify.hpp"
#include "tripath/error.hpp"
#include "tripath/kd.hpp"
#include "tripath/states.hpp"

using namespace tripath;

namespace {

std::set<std::string> label_set(const ClassificationResult& r) {
  std::set<std::string> out;
  for (const auto& l : r.labels) out.insert(l.str());
  return out;
}

std::set<std::string> labels_of(const RayState& psi) { return label_set(classify(psi)); }

std::set<char> kinds_of(const RayState& psi) {
  std::set<char> out;
  for (const auto& l : classify(psi).labels) out.insert(to_char(l.kind));
  return out;
}

// Labels seen by strict points scattered around psi.
std::set<std::string> neighbourhood_labels(const RayState& psi, double radius, int samples,
                                           std::mt19937_64& rng) {
  std::set<std::string> out;
  for (int i = 0; i < samples; ++i) {
    const oracle::Vec3 d = oracle::random_unit(rng);
    const RayState q = normalize({psi[0] + radius * d[0], psi[1] + radius * d[1],
                                  psi[2] + radius * d[2]});
    const ClassificationResult r = classify(q);
    if (r.pattern.strict()) out.insert(r.labels.at(0).str());
  }
  return out;
}

bool random_interior(const KDProfile& prof, double tol) {
  return std::all_of(prof.values.begin(), prof.values.end(),
                     [&](double v) { return std::abs(v) > 10 * tol; });
}

}  // namespace

TEST_CASE("sign_pattern thresholds at tol") {
  KDProfile prof;
  prof.values = {-1.0, -1e-10, 0.0, 1e-10, 1.0, 2e-9, -2e-9, 0.5, -0.5, 1e-9};
  const SignPattern p = sign_pattern(prof, 1e-9);
  CHECK(p.str() == "-000++-+-0");
  CHECK_FALSE(p.strict());
  CHECK(negative_counts(p) == std::pair<int, int>{1, 2});
}

TEST_CASE("compatible_with treats zero as either sign") {
  KDProfile a, b;
  a.values = {-1, 0, 1, 1, 1, 1, 1, 1, 1, 1};
  b.values = {-1, -1, 1, 1, 1, 1, 1, 1, 1, 1};
  const SignPattern pa = sign_pattern(a, 1e-9);
  const SignPattern pb = sign_pattern(b, 1e-9);
  CHECK(pa.compatible_with(pb));
  b.values[1] = 1;
  CHECK(pa.compatible_with(sign_pattern(b, 1e-9)));
  b.values[0] = 1;
  CHECK_FALSE(pa.compatible_with(sign_pattern(b, 1e-9)));
}

TEST_CASE("label list has 31 distinct labels with the class counts") {
  const auto& labels = all_labels();
  REQUIRE(labels.size() == 31);
  std::set<std::string> names;
  std::map<char, int> per_kind;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    names.insert(labels[i].str());
    ++per_kind[to_char(labels[i].kind)];
    CHECK(label_index(labels[i]) == i);
    CHECK(parse_label(labels[i].str()) == labels[i]);
  }
  CHECK(names.size() == 31);
  CHECK(per_kind['N'] == 1);
  CHECK(per_kind['V'] == 5);
  CHECK(per_kind['B'] == 5);
  CHECK(per_kind['T'] == 5);
  CHECK(per_kind['X'] == 10);
  CHECK(per_kind['Q'] == 5);
  CHECK_THROWS_AS((void)parse_label("Z(1)"), Error);
  CHECK_THROWS_AS((void)parse_label("V(3)"), Error);
}

TEST_CASE("class signatures") {
  CHECK(class_signature(ClassKind::N) == std::pair<int, int>{5, 0});
  CHECK(class_signature(ClassKind::V) == std::pair<int, int>{4, 0});
  CHECK(class_signature(ClassKind::B) == std::pair<int, int>{3, 0});
  CHECK(class_signature(ClassKind::T) == std::pair<int, int>{2, 2});
  CHECK(class_signature(ClassKind::X) == std::pair<int, int>{1, 2});
  CHECK(class_signature(ClassKind::Q) == std::pair<int, int>{0, 2});
}

TEST_CASE("subclass table: 31 distinct strict patterns with matching signatures") {
  const SubclassTable& table = default_subclass_table();
  REQUIRE(table.size() == 31);
  std::set<std::string> patterns;
  for (const SubclassEntry& e : table.entries()) {
    INFO(e.label.str());
    CHECK(e.pattern.strict());
    patterns.insert(e.pattern.str());
    CHECK(negative_counts(e.pattern) == class_signature(e.label.kind));
    CHECK(table.lookup(e.pattern) == std::optional<ClassLabel>(e.label));
    // The representative sits strictly inside its own polygon.
    const ClassificationResult r = classify(e.representative);
    CHECK(r.singleton());
    CHECK(r.labels[0] == e.label);
  }
  CHECK(patterns.size() == 31);
}

TEST_CASE("centroid patterns quoted for B(1,S2), Q(S2,D1) and N") {
  const SubclassTable& table = default_subclass_table();
  auto pattern_of = [&](const std::string& l) {
    for (const auto& e : table.entries()) {
      if (e.label.str() == l) return e.pattern.str();
    }
    return std::string{};
  };
  // Pairs: (1,P2) (2,P1) (f,3) (S1,D2) (S2,D1) | (1,f) (1,S2) (2,f) (2,S1) (S1,S2)
  CHECK(pattern_of("B(1,S2)") == "+---+" "+++++");
  CHECK(pattern_of("Q(S2,D1)") == "+++++" "-++-+");
  CHECK(pattern_of("N") == "-----" "+++++");
}

TEST_CASE("polygon corners are adjacent named states") {
  for (const ClassLabel& l : all_labels()) {
    const auto corners = polygon_corners(l);
    INFO(l.str());
    switch (l.kind) {
      case ClassKind::N: CHECK(corners.size() == 5); break;
      case ClassKind::Q: CHECK(corners.size() == 4); break;
      default: CHECK(corners.size() == 3); break;
    }
    // Consecutive corners share a zero-probability circle.
    for (std::size_t i = 0; i < corners.size(); ++i) {
      const RayState a = find_named_state(corners[i]).ray;
      const RayState b = find_named_state(corners[(i + 1) % corners.size()]).ray;
      bool shared = false;
      for (Path p : kAllPaths) {
        const RayState& r = default_system().ray(p);
        if (std::abs(inner(a, r)) < 1e-12 && std::abs(inner(b, r)) < 1e-12) shared = true;
      }
      CHECK(shared);
    }
  }
}

TEST_CASE("classification examples") {
  CHECK(labels_of(n_state(Path::Two).ray) ==
        std::set<std::string>{"N", "V(1)", "V(S2)", "B(1,S2)"});
  CHECK(labels_of(theta_state(Path::D1).ray) ==
        std::set<std::string>{"Q(S1,D2)", "Q(1,P2)", "X(1,D2)", "X(S1,P2)"});
  CHECK(kinds_of(normalize(oracle::vec("f"))) == std::set<char>{'B', 'Q', 'T', 'V', 'X'});
  CHECK(labels_of(joint_basis()[0].ray) == std::set<std::string>{"Q(S2,D1)"});
}

TEST_CASE("path states: zero counts and classes") {
  const SignPattern one = classify(normalize({1, 0, 0})).pattern;
  const std::string s = one.str();
  CHECK(std::count(s.begin(), s.begin() + 5, '0') == 4);
  CHECK(std::count(s.begin() + 5, s.end(), '0') == 3);

  for (Path k : kInnerPaths) {
    const RayState r = default_system().ray(k);
    const std::string t = classify(r).pattern.str();
    INFO(to_string(k));
    CHECK(std::count(t.begin(), t.begin() + 5, '0') == 2);
    CHECK(std::count(t.begin() + 5, t.end(), '0') == 4);
    const auto kinds = kinds_of(r);
    CHECK(kinds == std::set<char>{'Q', 'T', 'X'});
  }
}

TEST_CASE("boundary expansion covers every nearby strict label") {
  std::mt19937_64 rng(51);
  std::vector<RayState> corners;
  for (const auto& s : named_states()) corners.push_back(s.ray);
  for (const RayState& c : corners) {
    const auto expanded = labels_of(c);
    const auto seen = neighbourhood_labels(c, 1e-3, 400, rng);
    INFO(c[0] << "," << c[1] << "," << c[2]);
    CHECK_FALSE(seen.empty());
    for (const auto& l : seen) CHECK(expanded.count(l) == 1);
  }
  // At N and theta corners, where three polygons or four meet, the expansion
  // is exact.
  CHECK(neighbourhood_labels(n_state(Path::Two).ray, 1e-3, 2000, rng) ==
        labels_of(n_state(Path::Two).ray));
  CHECK(neighbourhood_labels(theta_state(Path::D1).ray, 1e-3, 2000, rng) ==
        labels_of(theta_state(Path::D1).ray));
}

TEST_CASE("random interior states are singletons with the class signature") {
  std::mt19937_64 rng(52);
  int tested = 0;
  for (int i = 0; i < 20000; ++i) {
    const RayState psi = normalize(oracle::random_unit(rng));
    const KDProfile prof = kd_profile(psi);
    if (!random_interior(prof, kDefaultClassifyTol)) continue;
    ++tested;
    const ClassificationResult r = classify(psi);
    REQUIRE(r.singleton());
    CHECK(negative_counts(r.pattern) == class_signature(r.labels[0].kind));
    if (r.labels[0].kind == ClassKind::N) CHECK(inequality_sum(psi) < 1.0);
  }
  CHECK(tested > 19000);
}

TEST_CASE("mirror maps labels and patterns consistently") {
  CHECK(mirror(Path::One) == Path::Two);
  CHECK(mirror(Path::F) == Path::F);
  CHECK(mirror(Path::Three) == Path::Three);
  CHECK(mirror(Path::D1) == Path::D2);
  for (const ClassLabel& l : all_labels()) {
    CHECK(mirror(mirror(l)) == l);
    CHECK(label_index(mirror(l)) < 31);
  }
  // Swapping c1 and c2 is the mirror of the interferometer.
  std::mt19937_64 rng(53);
  for (int i = 0; i < 2000; ++i) {
    const oracle::Vec3 v = oracle::random_unit(rng);
    const KDProfile prof = kd_profile(normalize(v));
    if (!random_interior(prof, kDefaultClassifyTol)) continue;
    const ClassLabel a = classify(normalize(v)).labels.at(0);
    const ClassLabel b = classify(normalize({v[1], v[0], v[2]})).labels.at(0);
    CHECK(mirror(a) == b);
  }
}

TEST_CASE("tolerance widens boundaries") {
  const RayState near_nf = normalize({1, 1, 1 + 1e-7});
  CHECK(classify(near_nf, 1e-12).labels.size() < classify(near_nf, 1e-3).labels.size());
}
