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
#include <utility>
#include <vector>

#include "tripath/hilbert.hpp"
#include "tripath/interferometer.hpp"
#include "tripath/kd.hpp"

namespace tripath {

/// Default magnitude below which a KD value counts as zero.
inline constexpr double kDefaultClassifyTol = 1e-9;

enum class Trit : std::int8_t { Neg = -1, Zero = 0, Pos = 1 };

/// One trit per canonical KD pair, in kCanonicalPairs order.
struct SignPattern {
  std::array<Trit, kPairCount> trits{};

  bool strict() const;
  /// True when every nonzero trit of *this agrees with `strict_pattern`.
  bool compatible_with(const SignPattern& strict_pattern) const;
  /// "-----+++++" style: '-', '0', '+' per pair.
  std::string str() const;

  friend bool operator==(const SignPattern&, const SignPattern&) = default;
};

SignPattern sign_pattern(const KDProfile& profile, double tol);

/// Negative inner and outer KD values in a pattern.
std::pair<int, int> negative_counts(const SignPattern& pattern);

enum class ClassKind : std::uint8_t { N, V, B, T, X, Q };

char to_char(ClassKind kind);

/// Class plus sub-class indices: V(i); B(i,j) and T(i,j) with outer i, j;
/// X(i,k) with outer i, inner k; Q(i,l) with outer i, inner l.
struct ClassLabel {
  ClassKind kind = ClassKind::N;
  std::optional<Path> first;
  std::optional<Path> second;

  std::string str() const;
  friend bool operator==(const ClassLabel&, const ClassLabel&) = default;
};

/// Parses "N", "V(S2)", "B(1,S2)", ... Throws Error{Parse}.
ClassLabel parse_label(std::string_view text);

/// The 31 sub-class labels in table order.
const std::vector<ClassLabel>& all_labels();
std::size_t label_index(const ClassLabel& label);

/// Negative (inner, outer) KD counts that define each class.
std::pair<int, int> class_signature(ClassKind kind);

/// Image of a label under the mirror symmetry |1> <-> |2> (|3> fixed), which
/// swaps S1/S2, D1/D2, P1/P2 and fixes f.
ClassLabel mirror(const ClassLabel& label);
Path mirror(Path p);

/// Named corner states of the sub-class polygon, in boundary order.
std::vector<std::string> polygon_corners(const ClassLabel& label);

struct SubclassEntry {
  ClassLabel label;
  std::vector<std::string> corners;
  RayState representative;
  SignPattern pattern;
};

class SubclassTable {
 public:
  const std::vector<SubclassEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  /// Label whose strict pattern equals `pattern`, if any.
  std::optional<ClassLabel> lookup(const SignPattern& pattern) const;

 private:
  friend SubclassTable build_subclass_table(const PathSystem&, double);
  std::vector<SubclassEntry> entries_;
};

/// Evaluates the normalized centroid of each polygon's corners and records
/// its strict sign pattern. Throws Error{TableInconsistency} if a centroid
/// lands on a boundary or two sub-classes share a pattern.
SubclassTable build_subclass_table(const PathSystem& system = default_system(),
                                   double tol = kDefaultClassifyTol);

const SubclassTable& default_subclass_table();

struct ClassificationResult {
  SignPattern pattern;
  /// Every sub-class consistent with the pattern, in table order. A single
  /// label inside a polygon, several on its edges and corners.
  std::vector<ClassLabel> labels;

  bool singleton() const { return labels.size() == 1; }
};

/// Throws Error{UnknownPattern} when no label is consistent.
ClassificationResult classify(const RayState& psi, double tol = kDefaultClassifyTol,
                              const SubclassTable& table = default_subclass_table(),
                              const PathSystem& system = default_system());

}  // namespace tripath
