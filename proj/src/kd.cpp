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

#include "tripath/kd.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include "tripath/error.hpp"

namespace tripath {

std::string to_string(const KDPair& pair) {
  return "(" + std::string(to_string(pair.a)) + "," + std::string(to_string(pair.b)) + ")";
}

std::optional<std::size_t> pair_index(Path a, Path b) {
  for (std::size_t k = 0; k < kPairCount; ++k) {
    const auto& p = kCanonicalPairs[k];
    if ((p.a == a && p.b == b) || (p.a == b && p.b == a)) return k;
  }
  return std::nullopt;
}

const std::vector<Trajectory>& noncontextual_trajectories() {
  static const std::vector<Trajectory> all = [] {
    std::vector<Trajectory> out;
    std::array<std::size_t, 5> pick{};
    for (std::size_t code = 0; code < 243; ++code) {
      std::size_t rest = code;
      Trajectory t{};
      for (std::size_t c = 0; c < 5; ++c) {
        pick[c] = rest % 3;
        rest /= 3;
        t[c] = kContexts[c].paths[pick[c]];
      }
      bool consistent = true;
      for (Path p : kOuterPaths) {
        int in = 0;
        int chosen = 0;
        for (std::size_t c = 0; c < 5; ++c) {
          if (!kContexts[c].contains(p)) continue;
          ++in;
          chosen += t[c] == p ? 1 : 0;
        }
        consistent = consistent && (chosen == 0 || chosen == in);
      }
      if (consistent) out.push_back(t);
    }
    return out;
  }();
  return all;
}

bool visits(const Trajectory& t, Path p) {
  return std::find(t.begin(), t.end(), p) != t.end();
}

const Trajectory& trajectory(const KDPair& pair) {
  const Trajectory* found = nullptr;
  for (const auto& t : noncontextual_trajectories()) {
    if (visits(t, pair.a) && visits(t, pair.b)) {
      if (found) throw Error(ErrorKind::DegeneratePair, to_string(pair) + " lies on several trajectories");
      found = &t;
    }
  }
  if (!found) throw Error(ErrorKind::DegeneratePair, to_string(pair) + " lies on no trajectory");
  return *found;
}

double kd_value(const RayState& psi, const RayState& a, const RayState& b) {
  return inner(b, a) * inner(a, psi) * inner(psi, b);
}

double kd_value(const RayState& psi, Path a, Path b, const PathSystem& system) {
  return kd_value(psi, system.ray(a), system.ray(b));
}

double KDProfile::at(Path a, Path b) const {
  const auto k = pair_index(a, b);
  if (!k) {
    throw Error(ErrorKind::UnknownPath, "(" + std::string(to_string(a)) + "," +
                                            std::string(to_string(b)) +
                                            ") is not a profile pair");
  }
  return values[*k];
}

KDProfile kd_profile(const RayState& psi, const PathSystem& system) {
  KDProfile prof{psi, std::nullopt, {}};
  for (std::size_t k = 0; k < kPairCount; ++k) {
    prof.values[k] = kd_value(psi, kCanonicalPairs[k].a, kCanonicalPairs[k].b, system);
  }
  return prof;
}

std::array<KDTerm, 3> decompose_outer(const RayState& psi, Path outer,
                                      const PathSystem& system) {
  if (!is_outer(outer)) {
    throw Error(ErrorKind::UnknownPath,
                std::string(to_string(outer)) + " is not an outer path");
  }
  std::array<KDTerm, 3> terms{};
  std::size_t n = 0;
  // Outer pairs first, then the single inner pair.
  for (PairKind kind : {PairKind::Outer, PairKind::Inner}) {
    for (const auto& p : kCanonicalPairs) {
      if (p.kind == kind && (p.a == outer || p.b == outer)) {
        terms[n++] = {p, kd_value(psi, p.a, p.b, system)};
      }
    }
  }
  return terms;
}

double inequality_sum(const RayState& psi, const PathSystem& system) {
  double sum = 0.0;
  for (Path l : kInnerPaths) {
    const double amp = inner(system.ray(l), psi);
    sum += amp * amp;
  }
  return sum;
}

double violation(const RayState& psi, const PathSystem& system) {
  return std::max(0.0, 1.0 - inequality_sum(psi, system));
}

SymmetricEigen jacobi_eigen(const Matrix3& m) {
  Matrix3 a = m;
  Matrix3 v{{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}}};
  auto off = [&a] {
    return a[0][1] * a[0][1] + a[0][2] * a[0][2] + a[1][2] * a[1][2];
  };
  for (int sweep = 0; sweep < 64 && off() > 1e-28; ++sweep) {
    for (std::size_t p = 0; p < 2; ++p) {
      for (std::size_t q = p + 1; q < 3; ++q) {
        if (a[p][q] == 0.0) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < 3; ++k) {
          const double akp = a[k][p];
          const double akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < 3; ++k) {
          const double apk = a[p][k];
          const double aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < 3; ++k) {
          const double vkp = v[k][p];
          const double vkq = v[k][q];
          v[k][p] = c * vkp - s * vkq;
          v[k][q] = s * vkp + c * vkq;
        }
      }
    }
  }
  std::array<std::size_t, 3> order{0, 1, 2};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      if (a[order[j]][order[j]] < a[order[i]][order[i]]) std::swap(order[i], order[j]);
    }
  }
  SymmetricEigen out{};
  for (std::size_t k = 0; k < 3; ++k) {
    const std::size_t col = order[k];
    out.values[k] = a[col][col];
    out.vectors[k] = {v[0][col], v[1][col], v[2][col]};
  }
  return out;
}

Matrix3 inner_path_operator(const PathSystem& system) {
  Matrix3 m{};
  for (Path l : kInnerPaths) {
    const Vec3& c = system.ray(l).coeffs();
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) m[i][j] += c[i] * c[j];
    }
  }
  return m;
}

MaxViolation max_violation(const PathSystem& system) {
  const SymmetricEigen eig = jacobi_eigen(inner_path_operator(system));
  const double lambda = eig.values[0];
  return {normalize(eig.vectors[0]), lambda, 1.0 - lambda};
}

double kd_negative_bound(const RayState& a, const RayState& b) {
  const double overlap = std::abs(inner(a, b));
  if (overlap <= kParallelTol || overlap >= 1.0 - kParallelTol) {
    throw Error(ErrorKind::DegeneratePair,
                "KD bound needs a pair that is neither orthogonal nor parallel");
  }
  return overlap * (1.0 - overlap) / 2.0;
}

double kd_negative_bound(Path a, Path b, const PathSystem& system) {
  return kd_negative_bound(system.ray(a), system.ray(b));
}

KDExtrema extremal_kd_on_circle(const RayState& a, const RayState& b, std::size_t n) {
  const double ab = inner(a, b);
  if (std::abs(ab) <= kParallelTol || std::abs(ab) >= 1.0 - kParallelTol) {
    throw Error(ErrorKind::DegeneratePair,
                "great-circle scan needs a pair that is neither orthogonal nor parallel");
  }
  if (n < 2) n = 2;
  const Vec3& e1 = a.coeffs();
  Vec3 e2{};
  for (std::size_t i = 0; i < 3; ++i) e2[i] = b[i] - ab * e1[i];
  const double n2 = norm(e2);
  for (double& x : e2) x /= n2;

  std::size_t best_pos = 0;
  std::size_t best_neg = 0;
  double vpos = -2.0;
  double vneg = 2.0;
  auto point = [&](std::size_t j) {
    const double t = std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
    const double c = std::cos(t);
    const double s = std::sin(t);
    return Vec3{c * e1[0] + s * e2[0], c * e1[1] + s * e2[1], c * e1[2] + s * e2[2]};
  };
  for (std::size_t j = 0; j < n; ++j) {
    const Vec3 x = point(j);
    const double value = ab * dot(e1, x) * dot(x, b.coeffs());
    if (value > vpos) {
      vpos = value;
      best_pos = j;
    }
    if (value < vneg) {
      vneg = value;
      best_neg = j;
    }
  }
  return {normalize(point(best_pos)), vpos, normalize(point(best_neg)), vneg};
}

KDExtrema extremal_kd_on_circle(Path a, Path b, std::size_t n, const PathSystem& system) {
  if (a == b) throw Error(ErrorKind::DegeneratePair, "scan needs two distinct paths");
  return extremal_kd_on_circle(system.ray(a), system.ray(b), n);
}

}  // namespace tripath
