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

#include "tripath/classify.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "tripath/error.hpp"
#include "tripath/states.hpp"

namespace tripath {

namespace {

using P = Path;

ClassLabel make(ClassKind k, std::optional<Path> a = std::nullopt,
                std::optional<Path> b = std::nullopt) {
  return {k, a, b};
}

std::vector<ClassLabel> make_labels() {
  std::vector<ClassLabel> out;
  out.push_back(make(ClassKind::N));
  for (Path i : {P::One, P::Two, P::F, P::S1, P::S2}) out.push_back(make(ClassKind::V, i));
  const std::array<std::pair<Path, Path>, 5> outer_pairs{
      {{P::One, P::F}, {P::One, P::S2}, {P::S1, P::S2}, {P::Two, P::S1}, {P::Two, P::F}}};
  for (auto [i, j] : outer_pairs) out.push_back(make(ClassKind::B, i, j));
  for (auto [i, j] : outer_pairs) out.push_back(make(ClassKind::T, i, j));
  // Each B(i,j) borders X(i,k) and X(j,k), where k is the inner path
  // orthogonal to neither i nor j.
  const std::array<std::pair<Path, Path>, 10> x_pairs{
      {{P::One, P::D2}, {P::F, P::D2}, {P::One, P::P1}, {P::S2, P::P1}, {P::S1, P::Three},
       {P::S2, P::Three}, {P::Two, P::P2}, {P::S1, P::P2}, {P::Two, P::D1}, {P::F, P::D1}}};
  for (auto [i, k] : x_pairs) out.push_back(make(ClassKind::X, i, k));
  for (const auto& p : kCanonicalPairs) {
    if (p.kind == PairKind::Inner) out.push_back(make(ClassKind::Q, p.a, p.b));
  }
  return out;
}

std::string n_of(Path p) { return "N_" + std::string(to_string(p)); }
std::string th_of(Path p) { return "theta_" + std::string(to_string(p)); }
std::string nm(Path p) { return std::string(to_string(p)); }

}  // namespace

bool SignPattern::strict() const {
  return std::none_of(trits.begin(), trits.end(), [](Trit t) { return t == Trit::Zero; });
}

bool SignPattern::compatible_with(const SignPattern& strict_pattern) const {
  for (std::size_t k = 0; k < kPairCount; ++k) {
    if (trits[k] != Trit::Zero && trits[k] != strict_pattern.trits[k]) return false;
  }
  return true;
}

std::string SignPattern::str() const {
  std::string s;
  for (Trit t : trits) s.push_back(t == Trit::Neg ? '-' : t == Trit::Pos ? '+' : '0');
  return s;
}

SignPattern sign_pattern(const KDProfile& profile, double tol) {
  SignPattern p;
  for (std::size_t k = 0; k < kPairCount; ++k) {
    const double v = profile.values[k];
    p.trits[k] = std::abs(v) <= tol ? Trit::Zero : v < 0.0 ? Trit::Neg : Trit::Pos;
  }
  return p;
}

std::pair<int, int> negative_counts(const SignPattern& pattern) {
  int in = 0;
  int out = 0;
  for (std::size_t k = 0; k < kPairCount; ++k) {
    if (pattern.trits[k] != Trit::Neg) continue;
    (kCanonicalPairs[k].kind == PairKind::Inner ? in : out) += 1;
  }
  return {in, out};
}

char to_char(ClassKind kind) { return "NVBTXQ"[static_cast<int>(kind)]; }

std::string ClassLabel::str() const {
  std::string s(1, to_char(kind));
  if (first) {
    s += "(" + nm(*first);
    if (second) s += "," + nm(*second);
    s += ")";
  }
  return s;
}

ClassLabel parse_label(std::string_view text) {
  for (const auto& l : all_labels()) {
    if (l.str() == text) return l;
  }
  throw Error(ErrorKind::Parse, "unknown class label '" + std::string(text) + "'");
}

const std::vector<ClassLabel>& all_labels() {
  static const std::vector<ClassLabel> labels = make_labels();
  return labels;
}

std::size_t label_index(const ClassLabel& label) {
  const auto& all = all_labels();
  const auto it = std::find(all.begin(), all.end(), label);
  if (it == all.end()) throw Error(ErrorKind::Parse, "not a sub-class label: " + label.str());
  return static_cast<std::size_t>(it - all.begin());
}

std::pair<int, int> class_signature(ClassKind kind) {
  switch (kind) {
    case ClassKind::N: return {5, 0};
    case ClassKind::V: return {4, 0};
    case ClassKind::B: return {3, 0};
    case ClassKind::T: return {2, 2};
    case ClassKind::X: return {1, 2};
    case ClassKind::Q: return {0, 2};
  }
  return {-1, -1};
}

Path mirror(Path p) {
  switch (p) {
    case P::One: return P::Two;
    case P::Two: return P::One;
    case P::S1: return P::S2;
    case P::S2: return P::S1;
    case P::D1: return P::D2;
    case P::D2: return P::D1;
    case P::P1: return P::P2;
    case P::P2: return P::P1;
    case P::Three:
    case P::F: return p;
  }
  return p;
}

ClassLabel mirror(const ClassLabel& label) {
  ClassLabel m = label;
  if (m.first) m.first = mirror(*m.first);
  if (m.second) m.second = mirror(*m.second);
  if (m.first && m.second && (m.kind == ClassKind::B || m.kind == ClassKind::T)) {
    // Outer pairs are unordered; match the spelling used in the table.
    for (const auto& l : all_labels()) {
      if (l.kind == m.kind && ((l.first == m.first && l.second == m.second) ||
                               (l.first == m.second && l.second == m.first))) {
        return l;
      }
    }
  }
  return m;
}

std::vector<std::string> polygon_corners(const ClassLabel& label) {
  const Path i = label.first.value_or(P::One);
  const Path j = label.second.value_or(P::One);
  switch (label.kind) {
    case ClassKind::N:
      return {n_of(P::F), n_of(P::One), n_of(P::S2), n_of(P::S1), n_of(P::Two)};
    case ClassKind::V: {
      // Apex i over the pentagon edge cut by the circle of i's inner partner.
      static const std::map<Path, std::pair<Path, Path>> base{
          {P::One, {P::Two, P::S1}}, {P::Two, {P::One, P::S2}}, {P::F, {P::S1, P::S2}},
          {P::S1, {P::F, P::One}},   {P::S2, {P::F, P::Two}}};
      const auto [a, b] = base.at(i);
      return {nm(i), n_of(a), n_of(b)};
    }
    case ClassKind::B: {
      static const std::map<std::pair<Path, Path>, Path> tip{
          {{P::One, P::F}, P::S1}, {{P::One, P::S2}, P::Two}, {{P::S1, P::S2}, P::F},
          {{P::Two, P::S1}, P::One}, {{P::Two, P::F}, P::S2}};
      return {nm(i), nm(j), n_of(tip.at({i, j}))};
    }
    case ClassKind::T: {
      static const std::map<std::pair<Path, Path>, Path> inner{
          {{P::One, P::F}, P::D2}, {{P::One, P::S2}, P::P1}, {{P::S1, P::S2}, P::Three},
          {{P::Two, P::S1}, P::P2}, {{P::Two, P::F}, P::D1}};
      return {nm(i), nm(j), nm(inner.at({i, j}))};
    }
    case ClassKind::X: {
      static const std::map<std::pair<Path, Path>, Path> theta{
          {{P::One, P::D2}, P::D1},  {{P::F, P::D2}, P::P1},   {{P::One, P::P1}, P::Three},
          {{P::S2, P::P1}, P::D2},   {{P::S1, P::Three}, P::P1}, {{P::S2, P::Three}, P::P2},
          {{P::Two, P::P2}, P::Three}, {{P::S1, P::P2}, P::D1}, {{P::Two, P::D1}, P::D2},
          {{P::F, P::D1}, P::P2}};
      return {nm(i), nm(j), th_of(theta.at({i, j}))};
    }
    case ClassKind::Q: {
      // The theta corners belong to the inner paths of the two contexts of i.
      std::vector<Path> thetas;
      for (const auto& c : kContexts) {
        if (c.contains(i)) thetas.push_back(inner_path_of(c));
      }
      return {nm(i), th_of(thetas[0]), nm(j), th_of(thetas[1])};
    }
  }
  return {};
}

std::optional<ClassLabel> SubclassTable::lookup(const SignPattern& pattern) const {
  for (const auto& e : entries_) {
    if (e.pattern == pattern) return e.label;
  }
  return std::nullopt;
}

SubclassTable build_subclass_table(const PathSystem& system, double tol) {
  std::map<std::string, RayState> named;
  for (const auto& s : named_states(system)) named.emplace(s.name, s.ray);

  SubclassTable table;
  for (const auto& label : all_labels()) {
    SubclassEntry e{label, polygon_corners(label), RayState{}, {}};
    Vec3 sum{0.0, 0.0, 0.0};
    const Vec3& ref = named.at(e.corners.front()).coeffs();
    for (const auto& c : e.corners) {
      const Vec3& v = named.at(c).coeffs();
      // Take each corner on the same side of the sphere as the first one.
      const double s = dot(v, ref) < 0.0 ? -1.0 : 1.0;
      for (std::size_t k = 0; k < 3; ++k) sum[k] += s * v[k];
    }
    e.representative = normalize(sum);
    e.pattern = sign_pattern(kd_profile(e.representative, system), tol);
    if (!e.pattern.strict()) {
      throw Error(ErrorKind::TableInconsistency,
                  label.str() + ": polygon centroid lies on a zero-KD boundary");
    }
    if (auto other = table.lookup(e.pattern)) {
      throw Error(ErrorKind::TableInconsistency, label.str() + " and " + other->str() +
                                                     " share sign pattern " + e.pattern.str());
    }
    table.entries_.push_back(std::move(e));
  }
  return table;
}

const SubclassTable& default_subclass_table() {
  static const SubclassTable table = build_subclass_table();
  return table;
}

ClassificationResult classify(const RayState& psi, double tol, const SubclassTable& table,
                              const PathSystem& system) {
  ClassificationResult r{sign_pattern(kd_profile(psi, system), tol), {}};
  for (const auto& e : table.entries()) {
    if (r.pattern.compatible_with(e.pattern)) r.labels.push_back(e.label);
  }
  if (r.labels.empty()) {
    throw Error(ErrorKind::UnknownPattern, "no sub-class matches pattern " + r.pattern.str());
  }
  return r;
}

}  // namespace tripath
