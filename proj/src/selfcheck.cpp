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

#include "tripath/selfcheck.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tripath/atlas.hpp"
#include "tripath/classify.hpp"
#include "tripath/interferometer.hpp"
#include "tripath/kd.hpp"
#include "tripath/report.hpp"
#include "tripath/states.hpp"

namespace tripath {

namespace {

using P = Path;

class Recorder {
 public:
  void group(std::string g) { group_ = std::move(g); }

  void near(const std::string& name, double got, double want, double tol) {
    std::ostringstream d;
    d.precision(15);
    d << "got " << got << ", want " << want << " (tol " << tol << ")";
    out_.push_back({group_, name, std::abs(got - want) <= tol, d.str()});
  }

  void ray(const std::string& name, const RayState& got, const Vec3& want, double tol) {
    const RayState w = normalize(want);
    std::ostringstream d;
    d.precision(12);
    d << "got [" << got.c1() << ", " << got.c2() << ", " << got.c3() << "], want ["
      << w.c1() << ", " << w.c2() << ", " << w.c3() << "]";
    out_.push_back({group_, name, got.same_ray(w, tol), d.str()});
  }

  void holds(const std::string& name, bool ok, const std::string& detail = {}) {
    out_.push_back({group_, name, ok, detail});
  }

  std::vector<CheckResult> take() { return std::move(out_); }

 private:
  std::string group_;
  std::vector<CheckResult> out_;
};

std::string join(const std::vector<ClassLabel>& labels) {
  std::string s;
  for (const auto& l : labels) s += (s.empty() ? "" : " ") + l.str();
  return s;
}

bool same_labels(const std::vector<ClassLabel>& got, std::vector<std::string> want) {
  std::vector<std::string> g;
  for (const auto& l : got) g.push_back(l.str());
  std::sort(g.begin(), g.end());
  std::sort(want.begin(), want.end());
  return g == want;
}

}  // namespace

std::vector<CheckResult> run_selfchecks() {
  constexpr double kExact = 1e-12;
  const PathSystem& sys = default_system();
  const auto ray = [&](Path p) { return sys.ray(p); };
  const auto N = [&](Path p) { return n_state(p, sys).ray; };
  const auto TH = [&](Path p) { return theta_state(p, sys).ray; };
  const double r3 = std::sqrt(3.0);
  Recorder r;

  r.group("geometry");
  r.ray("normalize(3,1,1) is N_2", normalize({3, 1, 1}), {3, 1, 1}, kExact);
  r.near("<S1|S2> = 1/2", inner(ray(P::S1), ray(P::S2)), 0.5, kExact);
  r.ray("orthogonal to D1 and D2 is N_f", orthogonal_to_pair(ray(P::D1), ray(P::D2)), {1, 1, 1},
        kExact);
  r.ray("theta_3 lies on the P(3)=0 and P(f)=0 circles",
        orthogonal_to_pair(ray(P::Three), ray(P::F)), {1, -1, 0}, kExact);

  r.group("interferometer");
  r.ray("|S1>", ray(P::S1), {0, 1, 1}, kExact);
  r.ray("|f>", ray(P::F), {1, 1, -1}, kExact);
  r.ray("|S2>", ray(P::S2), {1, 0, 1}, kExact);
  r.ray("|D1>", ray(P::D1), {0, 1, -1}, kExact);
  r.ray("|P1>", ray(P::P1), {2, -1, 1}, kExact);
  r.ray("|P2>", ray(P::P2), {-1, 2, 1}, kExact);
  r.ray("|D2>", ray(P::D2), {1, 0, -1}, kExact);
  r.holds("outputs reproduce the inputs", verify_closure(sys, kExact));
  {
    double worst = 0.0;
    for (const auto& c : kContexts) {
      for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = i + 1; j < 3; ++j) {
          worst = std::max(worst, std::abs(inner(ray(c.paths[i]), ray(c.paths[j]))));
        }
      }
    }
    r.near("contexts are orthonormal", worst, 0.0, kExact);
  }
  {
    double lowest = 1.0;
    for (Path a : kOuterPaths) {
      for (Path b : kOuterPaths) lowest = std::min(lowest, inner(ray(a), ray(b)));
    }
    r.holds("outer overlaps are zero or positive", lowest > -kExact);
  }
  {
    const std::array<std::pair<Path, Path>, 5> chain{
        {{P::Three, P::D1}, {P::D1, P::P1}, {P::P1, P::P2}, {P::P2, P::D2}, {P::D2, P::Three}}};
    bool all_negative = true;
    for (auto [a, b] : chain) {
      all_negative = all_negative && dot(sys.cascade_vector(a), sys.cascade_vector(b)) < 0.0;
    }
    r.holds("consecutive inner paths overlap negatively", all_negative);
  }

  r.group("hardy");
  r.near("P(f|N_f) = 1/9", hardy_value(P::F, sys), 1.0 / 9, kExact);
  r.near("P(1|N_1) = 1/11", hardy_value(P::One, sys), 1.0 / 11, kExact);
  r.near("P(2|N_2) = 1/11", hardy_value(P::Two, sys), 1.0 / 11, kExact);
  r.near("P(S1|N_S1) = 1/10", hardy_value(P::S1, sys), 1.0 / 10, kExact);
  r.near("P(S2|N_S2) = 1/10", hardy_value(P::S2, sys), 1.0 / 10, kExact);

  r.group("states");
  r.ray("N_f", N(P::F), {1, 1, 1}, kExact);
  r.ray("N_1", N(P::One), {1, 3, 1}, kExact);
  r.ray("N_S2", N(P::S2), {1, 2, 0}, kExact);
  r.ray("N_S1", N(P::S1), {2, 1, 0}, kExact);
  r.ray("N_2", N(P::Two), {3, 1, 1}, kExact);
  r.ray("theta_P2", TH(P::P2), {0, 1, -2}, kExact);
  r.ray("theta_D1", TH(P::D1), {1, -1, -1}, kExact);
  r.ray("theta_3", TH(P::Three), {1, -1, 0}, kExact);
  r.ray("theta_D2 (orthogonal to D2 and S1)", TH(P::D2), {1, -1, 1}, kExact);
  r.ray("theta_P1", TH(P::P1), {1, 0, -2}, kExact);

  r.group("inequality");
  r.near("sum(N_f) = 7/9", inequality_sum(N(P::F), sys), 7.0 / 9, kExact);
  r.near("sum(N_1) = 9/11", inequality_sum(N(P::One), sys), 9.0 / 11, kExact);
  r.near("sum(N_2) = 9/11", inequality_sum(N(P::Two), sys), 9.0 / 11, kExact);
  r.near("sum(N_S1) = 4/5", inequality_sum(N(P::S1), sys), 4.0 / 5, kExact);
  r.near("sum(N_S2) = 4/5", inequality_sum(N(P::S2), sys), 4.0 / 5, kExact);
  const MaxViolation mv = max_violation(sys);
  r.near("maximal violation = sqrt(11/12) - 1/2", mv.violation, std::sqrt(11.0 / 12) - 0.5, 1e-9);
  const PathValues pm = probabilities(mv.state, sys);
  r.near("maximizer P(1) = 0.4676", pm[index(P::One)], 0.4676, 5e-4);
  r.near("maximizer P(2) = 0.4676", pm[index(P::Two)], 0.4676, 5e-4);
  r.near("maximizer P(3) = 0.0648", pm[index(P::Three)], 0.0648, 5e-4);

  r.group("kd");
  const auto kd = [&](const RayState& s, Path a, Path b) { return kd_value(s, a, b, sys); };
  const RayState n2 = N(P::Two);
  const double p2 = hardy_value(P::Two, sys);
  const PathValues pn2 = probabilities(n2, sys);
  r.near("rho(1,S2|N_2) = 6/11", kd(n2, P::One, P::S2), 6.0 / 11, kExact);
  r.near("rho(S1,S2|N_2) = 2/11", kd(n2, P::S1, P::S2), 2.0 / 11, kExact);
  r.near("rho(1,f|N_2) = 3/11", kd(n2, P::One, P::F), 3.0 / 11, kExact);
  r.near("rho(1,S2|N_2) = P(P1|N_2)", kd(n2, P::One, P::S2), pn2[index(P::P1)], kExact);
  r.near("rho(S1,S2|N_2) = P(S1|N_2)", kd(n2, P::S1, P::S2), pn2[index(P::S1)], kExact);
  r.near("rho(1,f|N_2) = P(f|N_2)", kd(n2, P::One, P::F), pn2[index(P::F)], kExact);
  r.near("rho(2,S1|N_2) = P(2|N_2)", kd(n2, P::Two, P::S1), p2, kExact);
  r.near("rho(2,f|N_2) = P(2|N_2)", kd(n2, P::Two, P::F), p2, kExact);
  r.near("rho(2,P1|N_2) = -P(2|N_2)", kd(n2, P::Two, P::P1), -p2, kExact);
  r.near("rho(S1,D2|N_2) = -P(2|N_2)", kd(n2, P::S1, P::D2), -p2, kExact);
  r.near("rho(f,3|N_2) = -P(2|N_2)", kd(n2, P::F, P::Three), -p2, kExact);
  {
    const auto terms = decompose_outer(n2, P::Two, sys);
    r.near("rho(2,f)+rho(2,S1)+rho(2,P1) = P(2|N_2) for N_2",
           terms[0].value + terms[1].value + terms[2].value, 1.0 / 11, kExact);
  }
  const RayState ns1 = N(P::S1);
  const PathValues pns1 = probabilities(ns1, sys);
  r.near("rho(1,f|N_S1) = 2/5", kd(ns1, P::One, P::F), 0.4, kExact);
  r.near("rho(1,f|N_S1) = P(D2|N_S1)", kd(ns1, P::One, P::F), pns1[index(P::D2)], kExact);
  r.near("rho(2,f|N_S1) = 1/5", kd(ns1, P::Two, P::F), 0.2, kExact);
  r.near("rho(2,f|N_S1) = P(2|N_S1)", kd(ns1, P::Two, P::F), pns1[index(P::Two)], kExact);
  r.near("rho(1,S2|N_S1) = 2/5", kd(ns1, P::One, P::S2), 0.4, kExact);
  r.near("rho(1,S2|N_S1) = P(S2|N_S1)", kd(ns1, P::One, P::S2), pns1[index(P::S2)], kExact);
  const RayState nf = N(P::F);
  const PathValues pnf = probabilities(nf, sys);
  r.near("rho(S1,S2|N_f) = 1/3 = P(3|N_f)", kd(nf, P::S1, P::S2), pnf[index(P::Three)], kExact);
  r.near("rho(2,S1|N_f) = 1/3 = P(2|N_f)", kd(nf, P::Two, P::S1), 1.0 / 3, kExact);
  r.near("rho(1,S2|N_f) = 1/3 = P(1|N_f)", kd(nf, P::One, P::S2), pnf[index(P::One)], kExact);

  const RayState td1 = TH(P::D1);
  const PathValues ptd1 = probabilities(td1, sys);
  r.near("rho(2,S1|theta_D1) = 1/3 = P(2)", kd(td1, P::Two, P::S1), ptd1[index(P::Two)], kExact);
  r.near("rho(2,S1|theta_D1) = 1/3", kd(td1, P::Two, P::S1), 1.0 / 3, kExact);
  r.near("rho(1,f|theta_D1) = 1/9 = P(f)", kd(td1, P::One, P::F), 1.0 / 9, kExact);
  r.near("rho(S1,D2|theta_D1) = 1/3 = P(3)", kd(td1, P::S1, P::D2), ptd1[index(P::Three)], kExact);
  r.near("rho(1,P2|theta_D1) = 2/9 = P(P1)", kd(td1, P::One, P::P2), 2.0 / 9, kExact);
  r.near("rho(2,f|theta_D1) = -rho(2,P1|theta_D1)", kd(td1, P::Two, P::F),
         -kd(td1, P::Two, P::P1), kExact);
  r.near("rho(2,f|theta_D1) = -rho(f,3|theta_D1)", kd(td1, P::Two, P::F),
         -kd(td1, P::F, P::Three), kExact);
  const RayState t3 = TH(P::Three);
  r.near("rho(1,S2|theta_3) = 1/4", kd(t3, P::One, P::S2), 0.25, kExact);
  r.near("rho(2,S1|theta_3) = 1/4", kd(t3, P::Two, P::S1), 0.25, kExact);
  r.near("rho(1,P2|theta_3) = 1/4", kd(t3, P::One, P::P2), 0.25, kExact);
  r.near("rho(2,P1|theta_3) = 1/4", kd(t3, P::Two, P::P1), 0.25, kExact);
  const RayState tp1 = TH(P::P1);
  r.near("rho(1,f|theta_P1) = 1/5", kd(tp1, P::One, P::F), 0.2, kExact);
  r.near("rho(S1,S2|theta_P1) = 1/10", kd(tp1, P::S1, P::S2), 0.1, kExact);
  r.near("rho(f,3|theta_P1) = 2/5", kd(tp1, P::F, P::Three), 0.4, kExact);
  r.near("rho(S1,D2|theta_P1) = 3/10", kd(tp1, P::S1, P::D2), 0.3, kExact);
  for (Path k : kInnerPaths) {
    // The quasiclassical values are those whose trajectory avoids both
    // zero-probability paths of the theta state.
    const RayState th = TH(k);
    const Path o = opposite_outer(k);
    double sum = 0.0;
    bool positive = true;
    int used = 0;
    for (const auto& pair : kCanonicalPairs) {
      const auto& t = trajectory(pair);
      if (visits(t, k) || visits(t, o)) continue;
      const double v = kd(th, pair.a, pair.b);
      positive = positive && v > kExact;
      sum += v;
      ++used;
    }
    const std::string name = "theta_" + std::string(to_string(k));
    r.near("quasiclassical KD values of " + name + " sum to 1", sum, 1.0, 1e-10);
    r.holds(name + " has four positive quasiclassical KD values", positive && used == 4);
  }
  r.near("rho(S1,S2|theta_3) = -1/8", kd(t3, P::S1, P::S2), -1.0 / 8, kExact);
  r.near("rho(2,f|theta_D1) = -1/9", kd(td1, P::Two, P::F), -1.0 / 9, kExact);
  r.near("rho(1,S2|theta_P1) = -1/10", kd(tp1, P::One, P::S2), -0.1, kExact);
  r.near("rho(2,S1|theta_P2) = -1/10", kd(TH(P::P2), P::Two, P::S1), -0.1, kExact);
  r.near("rho(1,f|theta_D2) = -1/9", kd(TH(P::D2), P::One, P::F), -1.0 / 9, kExact);
  {
    bool nonneg = true;
    for (Path p : kAllPaths) {
      for (double v : kd_profile(ray(p), sys).values) nonneg = nonneg && v >= -kExact;
    }
    r.holds("KD values of path states are never negative", nonneg);
  }

  r.group("extremal");
  r.near("bound(S1,S2) = 1/8", kd_negative_bound(P::S1, P::S2, sys), 1.0 / 8, kExact);
  r.near("bound(1,S2) close to 1/10", kd_negative_bound(P::One, P::S2, sys),
         (1 / std::sqrt(2.0)) * (1 - 1 / std::sqrt(2.0)) / 2, kExact);
  r.near("bound(1,f)", kd_negative_bound(P::One, P::F, sys), (1 / r3) * (1 - 1 / r3) / 2, kExact);
  for (const auto& pair : kCanonicalPairs) {
    if (pair.kind != PairKind::Outer) continue;
    const KDExtrema ex = extremal_kd_on_circle(pair.a, pair.b, 100000, sys);
    const std::string tag = to_string(pair);
    r.near("scan minimum of rho" + tag + " meets the bound", -ex.max_negative,
           kd_negative_bound(pair.a, pair.b, sys), 1e-6);
    r.holds("extremal states of rho" + tag + " are orthogonal",
            std::abs(inner(ex.max_negative_state, ex.max_positive_state)) < 1e-4);
  }

  r.group("joint basis");
  const auto basis = joint_basis(sys);
  r.ray("Q(S2,D1)", basis[0].ray, {2, -1, 3}, kExact);
  r.ray("T(2,S1)", basis[1].ray, {0, 3, 1}, kExact);
  r.ray("T(1,f)", basis[2].ray, {5, 1, -3}, kExact);
  {
    double worst = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = i + 1; j < 3; ++j) {
        worst = std::max(worst, std::abs(inner(basis[i].ray, basis[j].ray)));
      }
    }
    r.near("joint basis is orthogonal", worst, 0.0, kExact);
  }
  const auto fid = [&](const RayState& a, const RayState& b) {
    const double x = inner(a, b);
    return x * x;
  };
  r.near("P(T(2,S1)|S1) = 4/5", fid(basis[1].ray, ray(P::S1)), 0.8, kExact);
  r.near("P(T(1,f)|f) = 27/35", fid(basis[2].ray, ray(P::F)), 27.0 / 35, kExact);
  r.near("P(Q(S2,D1)|P1) = 16/21", fid(basis[0].ray, ray(P::P1)), 16.0 / 21, kExact);
  r.near("rho(2,S1|Q) = -1/14", kd(basis[0].ray, P::Two, P::S1), -1.0 / 14, kExact);
  r.near("rho(1,f|Q) = -2/21", kd(basis[0].ray, P::One, P::F), -2.0 / 21, kExact);
  r.near("rho(S2,D1|T(2,S1)) = -1/20", kd(basis[1].ray, P::S2, P::D1), -1.0 / 20, kExact);
  r.near("rho(1,f|T(2,S1)) = 0", kd(basis[1].ray, P::One, P::F), 0.0, kExact);
  r.near("rho(2,S1|T(1,f)) = -1/35", kd(basis[2].ray, P::Two, P::S1), -1.0 / 35, kExact);
  r.near("rho(S2,D1|T(1,f)) = -2/35", kd(basis[2].ray, P::S2, P::D1), -2.0 / 35, kExact);
  const RayState t2f = normalize({1, 4, -2});
  const auto coeffs = decompose_in_basis(t2f, sys);
  r.near("T(2,f) coefficient on Q(S2,D1)", coeffs[0], -8.0 / (7.0 * std::sqrt(6.0)), kExact);
  r.near("T(2,f) coefficient on Q(S2,D1), surd form", coeffs[0],
         -4.0 * std::sqrt(14.0) / (7.0 * std::sqrt(21.0)), kExact);
  r.near("T(2,f) coefficient on T(2,S1)", coeffs[1],
         7.0 * std::sqrt(10.0) / (7.0 * std::sqrt(21.0)), kExact);
  r.near("T(2,f) coefficient on T(1,f)", coeffs[2],
         3.0 * std::sqrt(35.0) / (7.0 * std::sqrt(21.0)), kExact);
  struct Prob {
    const char* name;
    double got;
    double exact;
    double rounded;
  };
  const Prob probs[] = {
      {"P(2|T(2,f))", fid(ray(P::Two), t2f), 16.0 / 21, 0.76},
      {"P(f|T(2,f))", fid(ray(P::F), t2f), 7.0 / 9, 0.78},
      {"P(D1|T(2,f))", fid(ray(P::D1), t2f), 6.0 / 7, 0.86},
      {"P(Q(S2,D1)|D1)", fid(basis[0].ray, ray(P::D1)), 4.0 / 7, 0.57},
      {"P(Q(S2,D1)|T(2,f))", fid(basis[0].ray, t2f), 64.0 / 294, 0.22},
      {"P(T(2,S1)|2)", fid(basis[1].ray, ray(P::Two)), 9.0 / 10, 0.90},
      {"P(T(2,S1)|T(2,f))", fid(basis[1].ray, t2f), 100.0 / 210, 0.48},
      {"P(T(1,f)|f)", fid(basis[2].ray, ray(P::F)), 27.0 / 35, 0.77},
      {"P(T(1,f)|T(2,f))", fid(basis[2].ray, t2f), 225.0 / 735, 0.31},
  };
  for (const auto& p : probs) {
    r.near(std::string(p.name) + " exact", p.got, p.exact, kExact);
    r.near(std::string(p.name) + " rounded", p.got, p.rounded, 5e-3);
  }

  r.group("classification");
  const auto& table = default_subclass_table();
  r.holds("31 distinct strict sub-class patterns", table.size() == 31);
  const auto c_n2 = classify(n2);
  r.holds("N_2 -> {N, V(1), V(S2), B(1,S2)}",
          same_labels(c_n2.labels, {"N", "V(1)", "V(S2)", "B(1,S2)"}), join(c_n2.labels));
  const auto c_td1 = classify(td1);
  r.holds("theta_D1 -> {Q(S1,D2), Q(1,P2), X(1,D2), X(S1,P2)}",
          same_labels(c_td1.labels, {"Q(S1,D2)", "Q(1,P2)", "X(1,D2)", "X(S1,P2)"}),
          join(c_td1.labels));
  {
    const auto c_f = classify(ray(P::F));
    std::string kinds;
    for (const auto& l : c_f.labels) {
      if (kinds.find(to_char(l.kind)) == std::string::npos) kinds += to_char(l.kind);
    }
    std::sort(kinds.begin(), kinds.end());
    r.holds("|f> sits where V, B, T, X and Q meet", kinds == "BQTVX", join(c_f.labels));
  }
  {
    const auto c_3 = classify(ray(P::Three));
    std::string kinds;
    for (const auto& l : c_3.labels) {
      if (kinds.find(to_char(l.kind)) == std::string::npos) kinds += to_char(l.kind);
    }
    std::sort(kinds.begin(), kinds.end());
    r.holds("|3> sits where T, X and Q meet", kinds == "QTX", join(c_3.labels));
  }
  {
    const auto pat = classify(ray(P::One)).pattern;
    int in0 = 0;
    int out0 = 0;
    for (std::size_t k = 0; k < kPairCount; ++k) {
      if (pat.trits[k] == Trit::Zero) (k < 5 ? in0 : out0) += 1;
    }
    r.holds("|1> has four inner and three outer zeros", in0 == 4 && out0 == 3, pat.str());
  }
  {
    const auto pat = classify(ray(P::Three)).pattern;
    int in0 = 0;
    int out0 = 0;
    for (std::size_t k = 0; k < kPairCount; ++k) {
      if (pat.trits[k] == Trit::Zero) (k < 5 ? in0 : out0) += 1;
    }
    r.holds("|3> has two inner and four outer zeros", in0 == 2 && out0 == 4, pat.str());
  }
  for (const auto& e : table.entries()) {
    const auto [in, out] = negative_counts(e.pattern);
    const auto [want_in, want_out] = class_signature(e.label.kind);
    r.holds(e.label.str() + " centroid matches the class signature",
            in == want_in && out == want_out, e.pattern.str());
  }
  {
    const auto entry = table.lookup(classify(normalize({2, -1, 3})).pattern);
    r.holds("Q(S2,D1) state classifies to Q(S2,D1)",
            entry && entry->str() == "Q(S2,D1)");
  }

  r.group("atlas");
  const AtlasGrid grid = sample_atlas(512);
  const auto counts = label_counts(grid);
  r.holds("all 31 sub-classes appear at resolution 512",
          std::count_if(counts.begin(), counts.end(), [](std::size_t c) { return c > 0; }) == 31);
  {
    const auto [row, col] = grid.pixel_of(hemisphere_project(mv.state));
    r.holds("pixel at the maximal violation is class N", grid.at(row, col) == 0);
  }
  {
    const auto [row, col] = grid.pixel_of(hemisphere_project(nf));
    const auto corner = classify(nf).labels;
    const auto pixel = classify(hemisphere_lift(grid.pixel_center(row, col))).labels;
    const bool shared = std::any_of(pixel.begin(), pixel.end(), [&](const ClassLabel& l) {
      return std::find(corner.begin(), corner.end(), l) != corner.end();
    });
    r.holds("pixel at N_f carries one of its corner labels", shared, join(pixel));
  }
  const std::string svg = render(grid, RenderFormat::Vector);
  std::size_t circles = 0;
  std::size_t markers = 0;
  for (std::size_t at = 0; (at = svg.find("data-orthogonal-to=", at)) != std::string::npos; ++at) {
    ++circles;
  }
  for (std::size_t at = 0; (at = svg.find("class=\"state\"", at)) != std::string::npos; ++at) {
    ++markers;
  }
  r.holds("vector map has 10 circles and 20 labelled states", circles == 10 && markers == 20);

  return r.take();
}

}  // namespace tripath
