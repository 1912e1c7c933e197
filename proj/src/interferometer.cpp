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

#include "tripath/interferometer.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tripath/error.hpp"
#include "tripath/numeric_text.hpp"

namespace tripath {

namespace {

constexpr std::array<std::string_view, kPathCount> kPathNames{
    "1", "2", "3", "S1", "D1", "f", "P1", "P2", "S2", "D2"};

struct Stage {
  Vec3 outer;
  Vec3 mid;
};

Stage mix(const Vec3& outer, const Vec3& mid, double r) {
  const double t = std::sqrt(r);
  const double s = std::sqrt(1.0 - r);
  Stage out;
  for (std::size_t i = 0; i < 3; ++i) {
    out.outer[i] = t * outer[i] + s * mid[i];
    out.mid[i] = s * outer[i] - t * mid[i];
  }
  return out;
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

bool is_outer(Path p) {
  return std::find(kOuterPaths.begin(), kOuterPaths.end(), p) != kOuterPaths.end();
}

std::string_view to_string(Path p) { return kPathNames[index(p)]; }

std::optional<Path> try_parse_path(std::string_view name) {
  for (Path p : kAllPaths) {
    if (kPathNames[index(p)] == name) return p;
  }
  if (name == "F") return Path::F;
  return std::nullopt;
}

Path parse_path(std::string_view name) {
  if (auto p = try_parse_path(name)) return *p;
  throw Error(ErrorKind::UnknownPath, "no path named '" + std::string(name) + "'");
}

void InterferometerSpec::validate() const {
  const std::array<std::pair<const char*, double>, 5> all{
      {{"r1", r1}, {"rS1", rS1}, {"rf", rf}, {"rS2", rS2}, {"r2", r2}}};
  for (const auto& [name, r] : all) {
    if (!(r > 0.0 && r < 1.0)) {
      throw Error(ErrorKind::InvalidReflectivity,
                  std::string(name) + " = " + std::to_string(r) +
                      " is outside (0, 1)");
    }
  }
}

InterferometerSpec parse_spec(std::string_view text) {
  InterferometerSpec spec;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto sep = line.find_first_of("=:");
    if (sep == std::string_view::npos) {
      throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) +
                                        ": expected 'key = value'");
    }
    const auto key = trim(line.substr(0, sep));
    const double value = parse_real(trim(line.substr(sep + 1)), key);
    if (key == "r1") spec.r1 = value;
    else if (key == "rS1") spec.rS1 = value;
    else if (key == "rf") spec.rf = value;
    else if (key == "rS2") spec.rS2 = value;
    else if (key == "r2") spec.r2 = value;
    else {
      throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) +
                                        ": unknown key '" + std::string(key) + "'");
    }
  }
  spec.validate();
  return spec;
}

bool Context::contains(Path p) const {
  return std::find(paths.begin(), paths.end(), p) != paths.end();
}

Path inner_path_of(const Context& c) {
  for (Path p : c.paths) {
    if (!is_outer(p)) return p;
  }
  throw Error(ErrorKind::UnknownPath, "context without an inner path");
}

PathSystem build(const InterferometerSpec& spec) {
  spec.validate();
  const Vec3 e1{1.0, 0.0, 0.0};
  const Vec3 e2{0.0, 1.0, 0.0};
  const Vec3 e3{0.0, 0.0, 1.0};

  const Stage s1 = mix(e2, e3, spec.r1);            // -> S1, D1
  const Stage s2 = mix(e1, s1.mid, spec.rS1);       // -> f, P1
  const Stage s3 = mix(s1.outer, s2.mid, spec.rf);  // -> S2, P2
  const Stage s4 = mix(s2.outer, s3.mid, spec.rS2); // -> 2_out, D2
  const Stage s5 = mix(s3.outer, s4.mid, spec.r2);  // -> 1_out, 3_out

  PathSystem sys;
  sys.spec_ = spec;
  auto set = [&](Path p, const Vec3& v) {
    sys.cascade_[index(p)] = v;
    sys.rays_[index(p)] = normalize(v);
  };
  set(Path::One, e1);
  set(Path::Two, e2);
  set(Path::Three, e3);
  set(Path::S1, s1.outer);
  set(Path::D1, s1.mid);
  set(Path::F, s2.outer);
  set(Path::P1, s2.mid);
  set(Path::S2, s3.outer);
  set(Path::P2, s3.mid);
  set(Path::D2, s4.mid);
  sys.outputs_ = {normalize(s5.outer), normalize(s4.outer), normalize(s5.mid)};
  return sys;
}

const PathSystem& default_system() {
  static const PathSystem sys = build(InterferometerSpec{});
  return sys;
}

bool verify_closure(const PathSystem& system, double tol) {
  tol = std::max(tol, 1e-12);
  const auto& out = system.outputs();
  return out[0].same_ray(system.ray(Path::One), tol) &&
         out[1].same_ray(system.ray(Path::Two), tol) &&
         out[2].same_ray(system.ray(Path::Three), tol);
}

PathValues probabilities(const RayState& psi, const PathSystem& system) {
  PathValues p{};
  for (Path a : kAllPaths) {
    const double amp = inner(system.ray(a), psi);
    p[index(a)] = amp * amp;
  }
  return p;
}

}  // namespace tripath
