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

#include "tripath/states.hpp"

#include <string>

#include "tripath/error.hpp"

namespace tripath {

namespace {

std::size_t context_of_inner(Path inner) {
  for (std::size_t c = 0; c < kContexts.size(); ++c) {
    if (kContexts[c].contains(inner)) return c;
  }
  throw Error(ErrorKind::UnknownPath, "path is not in any context");
}

// Index a of the pair of cyclically adjacent contexts (a, a+1) sharing i.
std::size_t first_context_of_outer(Path outer) {
  for (std::size_t c = 0; c < kContexts.size(); ++c) {
    if (kContexts[c].contains(outer) &&
        kContexts[(c + 1) % kContexts.size()].contains(outer)) {
      return c;
    }
  }
  throw Error(ErrorKind::UnknownPath, "path is not shared by two contexts");
}

Path shared_outer(std::size_t a, std::size_t b) {
  for (Path p : kContexts[a].paths) {
    if (is_outer(p) && kContexts[b].contains(p)) return p;
  }
  throw Error(ErrorKind::UnknownPath, "contexts share no path");
}

std::string n_name(Path p) { return "N_" + std::string(to_string(p)); }
std::string theta_name(Path p) { return "theta_" + std::string(to_string(p)); }

}  // namespace

NamedState n_state(Path outer, const PathSystem& system) {
  if (!is_outer(outer)) {
    throw Error(ErrorKind::UnknownPath,
                "N states are indexed by outer paths, got " + std::string(to_string(outer)));
  }
  const std::size_t a = first_context_of_outer(outer);
  const Path l1 = inner_path_of(kContexts[(a + 2) % 5]);
  const Path l2 = inner_path_of(kContexts[(a + 4) % 5]);
  return {n_name(outer), orthogonal_to_pair(system.ray(l1), system.ray(l2)),
          {std::string(to_string(l1)), std::string(to_string(l2))}};
}

Path opposite_outer(Path inner) {
  if (is_outer(inner)) {
    throw Error(ErrorKind::UnknownPath,
                "theta states are indexed by inner paths, got " + std::string(to_string(inner)));
  }
  const std::size_t c = context_of_inner(inner);
  return shared_outer((c + 2) % 5, (c + 3) % 5);
}

NamedState theta_state(Path inner, const PathSystem& system) {
  const Path outer = opposite_outer(inner);
  return {theta_name(inner), orthogonal_to_pair(system.ray(inner), system.ray(outer)),
          {std::string(to_string(inner)), std::string(to_string(outer))}};
}

std::array<NamedState, 3> joint_basis(const PathSystem& system) {
  const NamedState n = n_state(Path::S2, system);
  const NamedState t = theta_state(Path::D1, system);
  const RayState q = orthogonal_to_pair(n.ray, t.ray);
  // T(2,S1) sits on the P(1) = 0 boundary of its sub-class.
  const RayState t2s1 = orthogonal_to_pair(system.ray(Path::One), q);
  const RayState t1f = orthogonal_to_pair(q, t2s1);
  return {{{"Q(S2,D1)", q, {n.name, t.name}},
           {"T(2,S1)", t2s1, {"1", "Q(S2,D1)"}},
           {"T(1,f)", t1f, {"Q(S2,D1)", "T(2,S1)"}}}};
}

double hardy_value(Path outer, const PathSystem& system) {
  const double amp = inner(system.ray(outer), n_state(outer, system).ray);
  return amp * amp;
}

std::array<double, 3> decompose_in_basis(const RayState& psi, const PathSystem& system) {
  const auto basis = joint_basis(system);
  return {inner(basis[0].ray, psi), inner(basis[1].ray, psi), inner(basis[2].ray, psi)};
}

std::vector<NamedState> named_states(const PathSystem& system) {
  std::vector<NamedState> out;
  out.reserve(20);
  for (Path p : kAllPaths) out.push_back({std::string(to_string(p)), system.ray(p), {}});
  for (Path p : {Path::F, Path::One, Path::S2, Path::S1, Path::Two}) {
    out.push_back(n_state(p, system));
  }
  for (Path p : kInnerPaths) out.push_back(theta_state(p, system));
  return out;
}

NamedState find_named_state(const std::string& name, const PathSystem& system) {
  for (auto& s : named_states(system)) {
    if (s.name == name) return s;
  }
  for (auto& s : joint_basis(system)) {
    if (s.name == name) return s;
  }
  throw Error(ErrorKind::UnknownPath, "no named state '" + name + "'");
}

}  // namespace tripath
