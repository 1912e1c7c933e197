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

#include "tripath/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "tripath/atlas.hpp"
#include "tripath/classify.hpp"
#include "tripath/error.hpp"
#include "tripath/interferometer.hpp"
#include "tripath/kd.hpp"
#include "tripath/numeric_text.hpp"
#include "tripath/report.hpp"
#include "tripath/selfcheck.hpp"
#include "tripath/states.hpp"

namespace tripath::cli {

namespace {

using nlohmann::json;

// "7/9" when x is a small-denominator fraction to within 1e-12.
std::string pretty(double x) {
  for (int q = 1; q <= 1000; ++q) {
    const double p = std::round(x * q);
    if (std::abs(x - p / q) <= 1e-12) {
      std::ostringstream s;
      s << static_cast<long long>(p);
      if (q != 1) s << "/" << q;
      return s.str();
    }
  }
  std::ostringstream s;
  s << std::setprecision(12) << x;
  return s.str();
}

std::string fixed(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "% .12f", x == 0.0 ? 0.0 : x);
  return buf;
}

std::string ray_text(const RayState& r) {
  return "[" + fixed(r.c1()) + ", " + fixed(r.c2()) + ", " + fixed(r.c3()) + "]";
}

struct StateArg {
  std::string text;
  std::string name;  // set when the argument named a known state
  RayState ray;
};

StateArg resolve_state(const std::string& text, std::ostream& err) {
  try {
    const NamedState s = find_named_state(text);
    return {text, s.name, s.ray};
  } catch (const Error&) {
  }
  const Vec3 v = parse_vec3(text, "--state");
  const double n = norm(v);
  const RayState r = normalize(v);
  if (std::abs(n - 1.0) > 1e-9) {
    err << "warning: --state has norm " << std::setprecision(12) << n
        << "; normalized to " << ray_text(r) << "\n";
  }
  return {text, "", r};
}

json path_values_json(const PathValues& v) {
  json j = json::object();
  for (Path p : kAllPaths) j[std::string(to_string(p))] = v[index(p)];
  return j;
}

int cmd_states(const std::string& config, bool as_json, std::ostream& out) {
  if (!config.empty()) {
    std::ifstream f(config);
    if (!f) throw Error(ErrorKind::IOFailure, "cannot read '" + config + "'");
    std::stringstream buf;
    buf << f.rdbuf();
    const InterferometerSpec spec = parse_spec(buf.str());
    const PathSystem sys = build(spec);
    const bool closed = verify_closure(sys, 1e-12);
    if (as_json) {
      json paths = json::array();
      for (Path p : kAllPaths) {
        paths.push_back({{"name", to_string(p)}, {"state", to_json(sys.ray(p))}});
      }
      out << json{{"command", "states"},
                  {"reflectivities",
                   {{"r1", spec.r1}, {"rS1", spec.rS1}, {"rf", spec.rf}, {"rS2", spec.rS2},
                    {"r2", spec.r2}}},
                  {"paths", paths},
                  {"closure", closed}}
                 .dump(2)
          << "\n";
    } else {
      for (Path p : kAllPaths) {
        out << std::left << std::setw(4) << to_string(p) << ray_text(sys.ray(p)) << "\n";
      }
      out << "closure: " << (closed ? "yes" : "no") << "\n";
    }
    return kExitOk;
  }
  const auto states = named_states();
  if (as_json) {
    json arr = json::array();
    for (const auto& s : states) arr.push_back(to_json(s));
    out << json{{"command", "states"}, {"states", arr}}.dump(2) << "\n";
    return kExitOk;
  }
  for (const auto& s : states) {
    out << std::left << std::setw(10) << s.name << ray_text(s.ray);
    if (!s.defined_by.empty()) out << "  orthogonal to " << s.defined_by[0] << ", " << s.defined_by[1];
    out << "\n";
  }
  return kExitOk;
}

int cmd_kd(const StateArg& s, bool as_json, bool as_csv, std::ostream& out) {
  KDProfile prof = kd_profile(s.ray);
  if (!s.name.empty()) prof.source = s.name;
  if (as_csv) {
    out << kd_profiles_csv({prof});
    return kExitOk;
  }
  if (as_json) {
    out << json{{"command", "kd"},
                {"profile", to_json(prof)},
                {"probabilities", path_values_json(probabilities(s.ray, default_system()))}}
               .dump(2)
        << "\n";
    return kExitOk;
  }
  out << "state " << ray_text(s.ray) << "\n";
  for (std::size_t k = 0; k < kPairCount; ++k) {
    const auto& p = kCanonicalPairs[k];
    out << (p.kind == PairKind::Inner ? "inner " : "outer ") << std::left << std::setw(9)
        << to_string(p) << std::setw(18) << fixed(prof.values[k]) << " " << pretty(prof.values[k])
        << "\n";
  }
  return kExitOk;
}

int cmd_classify(const StateArg& s, double tol, bool as_json, std::ostream& out) {
  const auto result = classify(s.ray, tol);
  if (as_json) {
    json j = to_json(s.ray, result);
    j["command"] = "classify";
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "state   " << ray_text(s.ray) << "\n";
  out << "pattern " << result.pattern.str() << "\n";
  out << "labels ";
  for (const auto& l : result.labels) out << " " << l.str();
  out << "\n";
  return kExitOk;
}

int cmd_inequality(const std::optional<StateArg>& s, bool want_max, bool as_json,
                   std::ostream& out) {
  if (want_max) {
    const MaxViolation mv = max_violation();
    const PathValues p = probabilities(mv.state, default_system());
    if (as_json) {
      out << json{{"command", "inequality"},
                  {"maximizer", to_json(mv.state)},
                  {"lambda_min", mv.lambda_min},
                  {"violation", mv.violation},
                  {"probabilities", path_values_json(p)}}
                 .dump(2)
          << "\n";
    } else {
      out << "maximizer  " << ray_text(mv.state) << "\n"
          << "sum        " << fixed(mv.lambda_min) << "\n"
          << "violation  " << fixed(mv.violation) << "\n"
          << "P(1) " << fixed(p[index(Path::One)]) << "  P(2) " << fixed(p[index(Path::Two)])
          << "  P(3) " << fixed(p[index(Path::Three)]) << "\n";
    }
    return kExitOk;
  }
  const double sum = inequality_sum(s->ray);
  const double v = violation(s->ray);
  if (as_json) {
    out << json{{"command", "inequality"}, {"state", to_json(s->ray)}, {"sum", sum},
                {"violation", v}}
               .dump(2)
        << "\n";
  } else {
    out << "sum       " << fixed(sum) << "  " << pretty(sum) << "\n"
        << "violation " << fixed(v) << "  " << pretty(v) << "\n";
  }
  return kExitOk;
}

int cmd_basis(bool as_json, std::ostream& out) {
  const auto basis = joint_basis();
  const auto& sys = default_system();
  json states = json::array();
  json table = json::array();
  for (const auto& b : basis) states.push_back(to_json(b));
  for (Path p : kAllPaths) {
    json row{{"path", to_string(p)}};
    for (const auto& b : basis) {
      const double x = inner(b.ray, sys.ray(p));
      row[b.name] = x * x;
    }
    table.push_back(row);
  }
  if (as_json) {
    json kd = json::array();
    for (const auto& b : basis) {
      KDProfile prof = kd_profile(b.ray);
      prof.source = b.name;
      kd.push_back(to_json(prof));
    }
    out << json{{"command", "basis"}, {"basis", states}, {"fidelities", table}, {"kd", kd}}.dump(2)
        << "\n";
    return kExitOk;
  }
  for (const auto& b : basis) out << std::left << std::setw(10) << b.name << ray_text(b.ray) << "\n";
  out << "\nP(outcome | path)\n" << std::left << std::setw(6) << "path";
  for (const auto& b : basis) out << std::setw(18) << b.name;
  out << "\n";
  for (Path p : kAllPaths) {
    out << std::setw(6) << to_string(p);
    for (const auto& b : basis) {
      const double x = inner(b.ray, sys.ray(p));
      out << std::setw(18) << pretty(x * x);
    }
    out << "\n";
  }
  return kExitOk;
}

int cmd_atlas(int resolution, const std::string& out_arg, const std::string& format,
              double tol, unsigned threads, bool as_json, std::ostream& out) {
  std::filesystem::path stem(out_arg);
  if (!stem.has_parent_path()) {
    if (const char* dir = std::getenv(kOutputDirEnv); dir && *dir) stem = std::filesystem::path(dir) / stem;
  }
  if (stem.has_parent_path()) std::filesystem::create_directories(stem.parent_path());
  const AtlasGrid grid = sample_atlas(resolution, tol, threads);
  std::vector<std::string> files;
  auto emit = [&](const std::string& suffix, const std::string& contents) {
    const std::string path = stem.string() + suffix;
    write_file(path, contents);
    files.push_back(path);
  };
  if (format == "ppm" || format == "raster" || format == "both") {
    emit(".ppm", render(grid, RenderFormat::Raster));
  }
  if (format == "svg" || format == "vector" || format == "both") {
    emit(".svg", render(grid, RenderFormat::Vector));
  }
  if (format != "both") parse_format(format);  // rejects unknown names
  const CanonicalTables tables = export_canonical_tables(tol);
  emit("_probabilities.csv", tables.probabilities);
  emit("_kd.csv", tables.kd_values);
  emit("_inequality.csv", tables.inequality);
  emit("_labels.csv", tables.labels);

  const auto counts = label_counts(grid);
  if (as_json) {
    json c = json::object();
    for (std::size_t i = 0; i < counts.size(); ++i) c[all_labels()[i].str()] = counts[i];
    out << json{{"command", "atlas"}, {"resolution", resolution}, {"files", files},
                {"label_counts", c}}
               .dump(2)
        << "\n";
  } else {
    for (const auto& f : files) out << "wrote " << f << "\n";
    const auto present = std::count_if(counts.begin(), counts.end(), [](auto n) { return n > 0; });
    out << present << " of " << counts.size() << " sub-classes present\n";
  }
  return kExitOk;
}

int cmd_verify(bool as_json, std::ostream& out) {
  const auto checks = run_selfchecks();
  const auto failed = std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.passed; });
  if (as_json) {
    json arr = json::array();
    for (const auto& c : checks) {
      arr.push_back({{"group", c.group}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    out << json{{"command", "verify"},
                {"passed", checks.size() - static_cast<std::size_t>(failed)},
                {"failed", failed},
                {"checks", arr}}
               .dump(2)
        << "\n";
  } else {
    for (const auto& c : checks) {
      out << (c.passed ? "PASS " : "FAIL ") << "[" << c.group << "] " << c.name;
      if (!c.passed) out << "  -- " << c.detail;
      out << "\n";
    }
    out << (checks.size() - static_cast<std::size_t>(failed)) << " passed, " << failed
        << " failed\n";
  }
  return failed == 0 ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kirkwood-Dirac analysis of the contextual three-path interferometer", "tripath"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Machine-readable JSON output");

  std::string state_text;
  double tol = 1e-9;
  bool as_csv = false;
  bool want_max = false;
  int resolution = 512;
  std::string out_stem = "atlas";
  std::string format = "both";
  unsigned threads = 0;
  std::string config;

  auto* states = app.add_subcommand("states", "Print the ten path states and ten N/theta states");
  states->add_option("--config", config, "Reflectivity file (r1, rS1, rf, rS2, r2) for the path states");
  states->add_flag("--json", as_json, "Machine-readable JSON output");

  auto* kd = app.add_subcommand("kd", "Print the ten canonical KD values of a state");
  kd->add_option("--state", state_text, "c1,c2,c3 (decimals, p/q, √n) or a state name")->required();
  kd->add_flag("--csv", as_csv, "CSV instead of text");
  kd->add_flag("--json", as_json, "Machine-readable JSON output");

  auto* cls = app.add_subcommand("classify", "Classify a state by its KD sign pattern");
  cls->add_option("--state", state_text, "c1,c2,c3 or a state name")->required();
  cls->add_option("--tol", tol, "Magnitude below which a KD value counts as zero")
      ->check(CLI::PositiveNumber);
  cls->add_flag("--json", as_json, "Machine-readable JSON output");

  auto* ineq = app.add_subcommand("inequality", "Evaluate the inner-path probability sum");
  auto* ineq_state = ineq->add_option("--state", state_text, "c1,c2,c3 or a state name");
  auto* ineq_max = ineq->add_flag("--max", want_max, "Report the maximally violating state");
  ineq_state->excludes(ineq_max);
  ineq->add_flag("--json", as_json, "Machine-readable JSON output");

  auto* basis = app.add_subcommand("basis", "Joint-measurement basis and its fidelity table");
  basis->add_flag("--json", as_json, "Machine-readable JSON output");

  auto* atlas = app.add_subcommand("atlas", "Render the hemisphere classification map and tables");
  atlas->add_option("--resolution", resolution, "Pixels per axis")->check(CLI::Range(16, 8192));
  atlas->add_option("--out", out_stem, "Output file stem; files get .ppm/.svg/_*.csv suffixes");
  atlas->add_option("--format", format, "ppm, svg or both");
  atlas->add_option("--tol", tol, "Classification tolerance")->check(CLI::PositiveNumber);
  atlas->add_option("--threads", threads, "Worker threads (0 = all cores)");
  atlas->add_flag("--json", as_json, "Machine-readable JSON output");

  auto* verify = app.add_subcommand("verify", "Run the built-in identity checks");
  verify->add_flag("--json", as_json, "Machine-readable JSON output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    // Required-option checks run before the unknown-argument check; name the
    // stray argument instead of the missing one.
    if (dynamic_cast<const CLI::RequiredError*>(&e) != nullptr) {
      if (app.get_subcommands().empty() && !app.remaining().empty()) {
        err << "unknown subcommand: " << app.remaining().front() << "\n"
            << "Run with --help for more information.\n";
        return kExitUsage;
      }
      for (const CLI::App* sub : app.get_subcommands()) {
        const auto extra = sub->remaining();
        if (!extra.empty()) {
          err << "unrecognized argument: " << extra.front() << "\n"
              << "Run with --help for more information.\n";
          return kExitUsage;
        }
      }
    }
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (states->parsed()) return cmd_states(config, as_json, out);
    if (kd->parsed()) return cmd_kd(resolve_state(state_text, err), as_json, as_csv, out);
    if (cls->parsed()) return cmd_classify(resolve_state(state_text, err), tol, as_json, out);
    if (ineq->parsed()) {
      if (!want_max && state_text.empty()) {
        err << "inequality: one of --state or --max is required\n";
        return kExitUsage;
      }
      std::optional<StateArg> s;
      if (!want_max) s = resolve_state(state_text, err);
      return cmd_inequality(s, want_max, as_json, out);
    }
    if (basis->parsed()) return cmd_basis(as_json, out);
    if (atlas->parsed()) {
      if (format != "both") parse_format(format);
      return cmd_atlas(resolution, out_stem, format, tol, threads, as_json, out);
    }
    if (verify->parsed()) return cmd_verify(as_json, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace tripath::cli
