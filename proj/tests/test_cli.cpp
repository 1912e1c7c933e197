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
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tripath/cli.hpp"

using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = tripath::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json golden(const std::string& name) {
  std::ifstream in(std::string(TRIPATH_GOLDEN_DIR) + "/" + name);
  REQUIRE(in.good());
  return json::parse(in);
}

// Structural equality with a numeric tolerance on floats.
void compare(const json& got, const json& want, const std::string& where) {
  INFO(where);
  if (want.is_number() && got.is_number()) {
    CHECK(std::abs(got.get<double>() - want.get<double>()) <= 1e-12);
    return;
  }
  REQUIRE(got.type() == want.type());
  if (want.is_object()) {
    REQUIRE(got.size() == want.size());
    for (auto it = want.begin(); it != want.end(); ++it) {
      REQUIRE(got.contains(it.key()));
      compare(got.at(it.key()), it.value(), where + "." + it.key());
    }
  } else if (want.is_array()) {
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < want.size(); ++i) {
      compare(got[i], want[i], where + "[" + std::to_string(i) + "]");
    }
  } else {
    CHECK(got == want);
  }
}

void check_golden(const std::vector<std::string>& args, const std::string& file) {
  const Outcome o = run(args);
  REQUIRE(o.code == tripath::cli::kExitOk);
  compare(json::parse(o.out), golden(file), file);
}

double pair_value(const json& profile, const std::string& pair) {
  for (const char* part : {"inner", "outer"}) {
    for (const auto& e : profile.at(part)) {
      if (e.at("pair") == pair) return e.at("value").get<double>();
    }
  }
  FAIL("missing pair " << pair);
  return 0;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("json output matches the golden files") {
  check_golden({"kd", "--state", "N_2", "--json"}, "kd_N_2.json");
  check_golden({"kd", "--state", "1/√3,-1/√3,-1/√3", "--json"}, "kd_theta_D1.json");
  check_golden({"classify", "--state", "3,1,1", "--json"}, "classify_3_1_1.json");
  check_golden({"classify", "--state", "theta_D1", "--json"}, "classify_theta_D1.json");
  check_golden({"inequality", "--state", "1/√3,1/√3,1/√3", "--json"}, "inequality_N_f.json");
  check_golden({"inequality", "--max", "--json"}, "inequality_max.json");
  check_golden({"basis", "--json"}, "basis.json");
  check_golden({"states", "--json"}, "states.json");
  // The global flag works too.
  check_golden({"--json", "basis"}, "basis.json");
}

TEST_CASE("golden files carry the expected values") {
  const json kd = golden("kd_N_2.json");
  CHECK(pair_value(kd.at("profile"), "(1,S2)") == doctest::Approx(6.0 / 11).epsilon(1e-12));
  CHECK(pair_value(kd.at("profile"), "(2,P1)") == doctest::Approx(-1.0 / 11).epsilon(1e-12));
  CHECK(kd.at("probabilities").at("2").get<double>() == doctest::Approx(1.0 / 11).epsilon(1e-12));

  const json t = golden("kd_theta_D1.json");
  CHECK(pair_value(t.at("profile"), "(2,f)") == doctest::Approx(-1.0 / 9).epsilon(1e-12));

  CHECK(golden("classify_3_1_1.json").at("labels") ==
        json::array({"N", "V(1)", "V(S2)", "B(1,S2)"}));
  const json theta = golden("classify_theta_D1.json").at("labels");
  CHECK(theta.size() == 4);
  for (const char* l : {"Q(S1,D2)", "Q(1,P2)", "X(1,D2)", "X(S1,P2)"}) {
    CHECK(std::find(theta.begin(), theta.end(), l) != theta.end());
  }

  const json nf = golden("inequality_N_f.json");
  CHECK(nf.at("sum").get<double>() == doctest::Approx(7.0 / 9).epsilon(1e-12));
  CHECK(nf.at("violation").get<double>() == doctest::Approx(2.0 / 9).epsilon(1e-12));

  const json mx = golden("inequality_max.json");
  CHECK(mx.at("violation").get<double>() ==
        doctest::Approx(std::sqrt(11.0 / 12) - 0.5).epsilon(1e-12));

  const json basis = golden("basis.json");
  CHECK(basis.at("basis").size() == 3);
  CHECK(basis.at("fidelities").size() == 10);
  CHECK(golden("states.json").at("states").size() == 20);
}

TEST_CASE("text output") {
  const Outcome ineq = run({"inequality", "--state", "1/√3,1/√3,1/√3"});
  CHECK(ineq.code == 0);
  CHECK(ineq.out.find("7/9") != std::string::npos);
  CHECK(ineq.out.find("2/9") != std::string::npos);

  // Decimal approximations are accepted.
  const Outcome approx = run({"inequality", "--state", "0.57735,0.57735,0.57735"});
  CHECK(approx.code == 0);
  CHECK(approx.out.find("0.77777") != std::string::npos);

  const Outcome cls = run({"classify", "--state", "3,1,1"});
  CHECK(cls.code == 0);
  CHECK(cls.out.find("N V(1) V(S2) B(1,S2)") != std::string::npos);
  CHECK(cls.err.find("warning") != std::string::npos);

  const Outcome unit = run({"classify", "--state", "1,0,0"});
  CHECK(unit.err.empty());

  const Outcome st = run({"states"});
  CHECK(st.out.find("theta_D2") != std::string::npos);

  const Outcome b = run({"basis"});
  CHECK(b.out.find("16/21") != std::string::npos);
  CHECK(b.out.find("27/35") != std::string::npos);
}

TEST_CASE("verify succeeds on the default build") {
  const Outcome v = run({"verify", "--json"});
  CHECK(v.code == tripath::cli::kExitOk);
  const json j = json::parse(v.out);
  CHECK(j.at("failed") == 0);
  CHECK(j.at("passed").get<int>() > 100);
}

TEST_CASE("usage errors") {
  const Outcome none = run({});
  CHECK(none.code == tripath::cli::kExitUsage);

  const Outcome unknown = run({"frobnicate"});
  CHECK(unknown.code == tripath::cli::kExitUsage);
  CHECK(unknown.err.find("frobnicate") != std::string::npos);

  const Outcome flag = run({"kd", "--bogus"});
  CHECK(flag.code == tripath::cli::kExitUsage);
  CHECK(flag.err.find("--bogus") != std::string::npos);

  const Outcome field = run({"kd", "--state", "1,x,1"});
  CHECK(field.code == tripath::cli::kExitUsage);
  CHECK(field.err.find("--state") != std::string::npos);

  const Outcome zero = run({"kd", "--state", "0,0,0"});
  CHECK(zero.code == tripath::cli::kExitUsage);
  CHECK(zero.err.find("ZeroVector") != std::string::npos);

  const Outcome tol = run({"classify", "--state", "1,0,0", "--tol", "-1"});
  CHECK(tol.code == tripath::cli::kExitUsage);

  const Outcome both = run({"inequality"});
  CHECK(both.code == tripath::cli::kExitUsage);

  const Outcome res = run({"atlas", "--resolution", "4", "--out", "x"});
  CHECK(res.code == tripath::cli::kExitUsage);
  CHECK(res.err.find("--resolution") != std::string::npos);

  const Outcome fmt = run({"atlas", "--resolution", "16", "--out", "x", "--format", "png"});
  CHECK(fmt.code == tripath::cli::kExitUsage);

  CHECK(run({"--help"}).code == tripath::cli::kExitOk);
}

TEST_CASE("states --config reads a reflectivity file") {
  const auto dir = std::filesystem::temp_directory_path() / "tripath_cli_config";
  std::filesystem::create_directories(dir);
  const auto cfg = dir / "spec.txt";
  std::ofstream(cfg) << "r1 = 1/2\nrS1 = 1/3\nrf = 1/3\nrS2 = 1/3\nr2 = 1/2\n";
  const Outcome o = run({"states", "--config", cfg.string()});
  CHECK(o.code == 0);
  CHECK(o.out.find("closure: no") != std::string::npos);

  std::ofstream(cfg) << "r1 = 2\n";
  CHECK(run({"states", "--config", cfg.string()}).code == tripath::cli::kExitUsage);
  CHECK(run({"states", "--config", (dir / "missing.txt").string()}).code ==
        tripath::cli::kExitUsage);
}

TEST_CASE("atlas writes every map file into the output directory") {
  const auto dir = std::filesystem::temp_directory_path() / "tripath_cli_atlas";
  std::filesystem::remove_all(dir);
  ::setenv(tripath::cli::kOutputDirEnv, dir.c_str(), 1);
  const Outcome o = run({"atlas", "--resolution", "64", "--out", "map", "--format", "both"});
  ::unsetenv(tripath::cli::kOutputDirEnv);
  REQUIRE(o.code == 0);
  for (const char* f : {"map.ppm", "map.svg", "map_probabilities.csv", "map_kd.csv",
                        "map_inequality.csv", "map_labels.csv"}) {
    INFO(f);
    CHECK(std::filesystem::exists(dir / f));
  }
  std::ifstream g(std::string(TRIPATH_GOLDEN_DIR) + "/atlas_64.ppm", std::ios::binary);
  const std::string want{std::istreambuf_iterator<char>(g), {}};
  CHECK(slurp(dir / "map.ppm") == want);
}
