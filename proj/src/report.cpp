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

#include "tripath/report.hpp"

#include <array>
#include <charconv>

namespace tripath {

std::string format_real(double x) {
  if (x == 0.0) return "0";
  std::array<char, 32> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), ptr);
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string csv_record(const std::vector<std::string>& fields) {
  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) line += ',';
    line += fields[i];
  }
  line += "\r\n";
  return line;
}

std::string kd_profiles_csv(const std::vector<KDProfile>& profiles) {
  std::vector<std::string> header{"state", "c1", "c2", "c3"};
  for (const auto& p : kCanonicalPairs) header.push_back(csv_field(to_string(p)));
  std::string out = csv_record(header);
  for (const auto& prof : profiles) {
    std::vector<std::string> row{csv_field(prof.source.value_or(""))};
    for (double c : prof.state.coeffs()) row.push_back(format_real(c));
    for (double v : prof.values) row.push_back(format_real(v));
    out += csv_record(row);
  }
  return out;
}

nlohmann::json to_json(const RayState& r) {
  return nlohmann::json::array({r.c1() + 0.0, r.c2() + 0.0, r.c3() + 0.0});
}

nlohmann::json to_json(const KDProfile& profile) {
  nlohmann::json values = nlohmann::json::object();
  nlohmann::json inner = nlohmann::json::array();
  nlohmann::json outer = nlohmann::json::array();
  for (std::size_t k = 0; k < kPairCount; ++k) {
    const auto& p = kCanonicalPairs[k];
    nlohmann::json entry{{"pair", to_string(p)}, {"value", profile.values[k] + 0.0}};
    (p.kind == PairKind::Inner ? inner : outer).push_back(entry);
  }
  nlohmann::json j{{"state", to_json(profile.state)}, {"inner", inner}, {"outer", outer}};
  if (profile.source) j["name"] = *profile.source;
  return j;
}

nlohmann::json to_json(const NamedState& state) {
  return {{"name", state.name}, {"state", to_json(state.ray)}, {"orthogonal_to", state.defined_by}};
}

nlohmann::json to_json(const RayState& psi, const ClassificationResult& result) {
  nlohmann::json labels = nlohmann::json::array();
  for (const auto& l : result.labels) labels.push_back(l.str());
  return {{"state", to_json(psi)}, {"pattern", result.pattern.str()}, {"labels", labels}};
}

}  // namespace tripath
