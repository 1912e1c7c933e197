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

#include "tripath/atlas.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "palette_data.hpp"
#include "tripath/error.hpp"
#include "tripath/report.hpp"
#include "tripath/states.hpp"

namespace tripath {

namespace {

static_assert(detail::kPaletteHex.size() == 31, "data/palette.txt must list 31 colours");

Rgb parse_hex(std::string_view hex) {
  auto byte = [&](std::size_t at) {
    return static_cast<std::uint8_t>(std::stoi(std::string(hex.substr(at, 2)), nullptr, 16));
  };
  return {byte(1), byte(3), byte(5)};
}

void classify_rows(AtlasGrid& grid, int first_row, int stride) {
  const int n = grid.resolution();
  for (int row = first_row; row < n; row += stride) {
    for (int col = 0; col < n; ++col) {
      const SpherePoint p = grid.pixel_center(row, col);
      if (p.u * p.u + p.v * p.v > 1.0) continue;
      const auto result = classify(hemisphere_lift(p), grid.tol());
      if (!result.pattern.strict()) {
        grid.set(row, col, AtlasGrid::kBoundary);
      } else {
        grid.set(row, col, static_cast<std::int16_t>(label_index(result.labels.front())));
      }
    }
  }
}

std::string fmt3(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  std::string s(buf);
  return s == "-0.000" ? "0.000" : s;
}

constexpr double kSvgSize = 640.0;
constexpr double kSvgRadius = 290.0;

std::string svg_xy(double u, double v) {
  return fmt3(kSvgSize / 2 + kSvgRadius * u) + "," + fmt3(kSvgSize / 2 - kSvgRadius * v);
}

// Hemisphere trace of the circle orthogonal to `axis`, as projected points.
std::vector<SpherePoint> circle_trace(const RayState& axis, std::size_t samples) {
  std::vector<SpherePoint> pts;
  pts.reserve(samples);
  const Vec3& a = axis.coeffs();
  if (std::abs(a[0]) > 1.0 - 1e-12) {
    // The equator: the rim of the projection disk.
    for (std::size_t k = 0; k < samples; ++k) {
      const double t = 2.0 * std::numbers::pi * static_cast<double>(k) /
                       static_cast<double>(samples);
      pts.push_back({std::cos(t), std::sin(t)});
    }
    return pts;
  }
  Vec3 e1 = cross(a, {1.0, 0.0, 0.0});
  const double n1 = norm(e1);
  for (double& x : e1) x /= n1;
  Vec3 e2 = cross(a, e1);
  if (e2[0] < 0.0) {
    for (double& x : e2) x = -x;
  }
  for (std::size_t k = 0; k < samples; ++k) {
    const double t = std::numbers::pi * static_cast<double>(k) /
                     static_cast<double>(samples - 1);
    const double c = std::cos(t);
    const double s = std::sin(t);
    pts.push_back({c * e1[1] + s * e2[1], c * e1[2] + s * e2[2]});
  }
  return pts;
}

std::string display_name(const std::string& name) {
  if (name.starts_with("theta_")) return "θ" + name.substr(6);
  return name;
}

std::string render_raster(const AtlasGrid& grid) {
  const int n = grid.resolution();
  std::string out = "P6\n" + std::to_string(n) + " " + std::to_string(n) + "\n255\n";
  out.reserve(out.size() + static_cast<std::size_t>(n) * static_cast<std::size_t>(n) * 3);
  const auto& pal = palette();
  for (int row = 0; row < n; ++row) {
    for (int col = 0; col < n; ++col) {
      const std::int16_t cell = grid.at(row, col);
      Rgb c{255, 255, 255};
      if (cell == AtlasGrid::kBoundary) {
        c = {0, 0, 0};
      } else if (cell >= 0) {
        const bool edge =
            (col > 0 && grid.at(row, col - 1) >= 0 && grid.at(row, col - 1) != cell) ||
            (row > 0 && grid.at(row - 1, col) >= 0 && grid.at(row - 1, col) != cell);
        c = edge ? Rgb{0, 0, 0} : pal[static_cast<std::size_t>(cell)];
      }
      out.push_back(static_cast<char>(c.r));
      out.push_back(static_cast<char>(c.g));
      out.push_back(static_cast<char>(c.b));
    }
  }
  return out;
}

std::string render_vector() {
  const auto& sys = default_system();
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" "
         "viewBox=\"0 0 640 640\">\n";
  out += "<rect width=\"640\" height=\"640\" fill=\"white\"/>\n";
  out += "<g id=\"circles\" fill=\"none\" stroke=\"black\" stroke-width=\"1\">\n";
  for (Path p : kAllPaths) {
    const bool rim = std::abs(sys.ray(p).c1()) > 1.0 - 1e-12;
    out += std::string(rim ? "<polygon" : "<polyline") + " data-orthogonal-to=\"" +
           std::string(to_string(p)) + "\" points=\"";
    bool first = true;
    for (const auto& pt : circle_trace(sys.ray(p), 720)) {
      if (!first) out += ' ';
      first = false;
      out += svg_xy(pt.u, pt.v);
    }
    out += "\"/>\n";
  }
  out += "</g>\n<g id=\"states\" font-family=\"sans-serif\" font-size=\"13\">\n";
  for (const auto& s : named_states(sys)) {
    const SpherePoint p = hemisphere_project(s.ray);
    const std::string fill = try_parse_path(s.name) ? "black" : "#555555";
    out += "<circle class=\"state\" data-name=\"" + s.name + "\" cx=\"" +
           fmt3(kSvgSize / 2 + kSvgRadius * p.u) + "\" cy=\"" +
           fmt3(kSvgSize / 2 - kSvgRadius * p.v) + "\" r=\"4\" fill=\"" + fill + "\"/>\n";
    out += "<text x=\"" + fmt3(kSvgSize / 2 + kSvgRadius * p.u + 6) + "\" y=\"" +
           fmt3(kSvgSize / 2 - kSvgRadius * p.v - 6) + "\">" + display_name(s.name) +
           "</text>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace

AtlasGrid::AtlasGrid(int resolution, double tol)
    : resolution_(resolution),
      tol_(tol),
      cells_(static_cast<std::size_t>(resolution) * static_cast<std::size_t>(resolution),
             kEmpty) {}

SpherePoint AtlasGrid::pixel_center(int row, int col) const {
  const double n = resolution_;
  return {-1.0 + (2.0 * col + 1.0) / n, 1.0 - (2.0 * row + 1.0) / n};
}

std::pair<int, int> AtlasGrid::pixel_of(const SpherePoint& p) const {
  const double n = resolution_;
  const int col = std::clamp(static_cast<int>(std::floor((p.u + 1.0) * n / 2.0)), 0,
                             resolution_ - 1);
  const int row = std::clamp(static_cast<int>(std::floor((1.0 - p.v) * n / 2.0)), 0,
                             resolution_ - 1);
  return {row, col};
}

AtlasGrid sample_atlas(int resolution, double tol, unsigned threads) {
  if (resolution < 16) throw std::invalid_argument("atlas resolution must be at least 16");
  AtlasGrid grid(resolution, tol);
  default_subclass_table();  // build once before the workers start
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(resolution));
  if (threads == 1) {
    classify_rows(grid, 0, 1);
    return grid;
  }
  {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back(classify_rows, std::ref(grid), static_cast<int>(t),
                           static_cast<int>(threads));
    }
  }
  return grid;
}

std::vector<std::size_t> label_counts(const AtlasGrid& grid) {
  std::vector<std::size_t> counts(all_labels().size(), 0);
  for (std::int16_t c : grid.cells()) {
    if (c >= 0) ++counts[static_cast<std::size_t>(c)];
  }
  return counts;
}

RenderFormat parse_format(std::string_view name) {
  if (name == "ppm" || name == "raster") return RenderFormat::Raster;
  if (name == "svg" || name == "vector") return RenderFormat::Vector;
  throw Error(ErrorKind::UnsupportedFormat, "unknown render format '" + std::string(name) + "'");
}

const std::array<Rgb, 31>& palette() {
  static const std::array<Rgb, 31> colours = [] {
    std::array<Rgb, 31> out{};
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = parse_hex(detail::kPaletteHex[i]);
    return out;
  }();
  return colours;
}

std::string render(const AtlasGrid& grid, RenderFormat format) {
  switch (format) {
    case RenderFormat::Raster: return render_raster(grid);
    case RenderFormat::Vector: return render_vector();
  }
  throw Error(ErrorKind::UnsupportedFormat, "unknown render format");
}

CanonicalTables export_canonical_tables(double tol) {
  const auto& sys = default_system();
  std::vector<NamedState> rows = named_states(sys);
  for (auto& b : joint_basis(sys)) rows.push_back(b);

  CanonicalTables t;
  std::vector<std::string> header{"state"};
  for (Path p : kAllPaths) header.push_back(csv_field(to_string(p)));
  t.probabilities = csv_record(header);
  std::vector<KDProfile> profiles;
  t.inequality = csv_record({"state", "inequality_sum", "violation"});
  t.labels = csv_record({"state", "pattern", "labels"});
  for (const auto& s : rows) {
    std::vector<std::string> rec{csv_field(s.name)};
    for (double p : probabilities(s.ray, sys)) rec.push_back(format_real(p));
    t.probabilities += csv_record(rec);

    KDProfile prof = kd_profile(s.ray, sys);
    prof.source = s.name;
    profiles.push_back(prof);

    t.inequality += csv_record({csv_field(s.name), format_real(inequality_sum(s.ray, sys)),
                                format_real(violation(s.ray, sys))});

    const auto cls = classify(s.ray, tol);
    std::string labels;
    for (const auto& l : cls.labels) labels += (labels.empty() ? "" : " ") + l.str();
    t.labels += csv_record({csv_field(s.name), cls.pattern.str(), csv_field(labels)});
  }
  t.kd_values = kd_profiles_csv(profiles);
  return t;
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error(ErrorKind::IOFailure, "cannot open '" + path + "' for writing");
  f.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!f) throw Error(ErrorKind::IOFailure, "write to '" + path + "' failed");
}

}  // namespace tripath
