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

#include "tripath/numeric_text.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "tripath/error.hpp"

namespace tripath {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail(std::string_view field, std::string_view text,
                       std::string_view why) {
  throw Error(ErrorKind::Parse, "field '" + std::string(field) + "': cannot parse '" +
                                    std::string(text) + "' (" + std::string(why) + ")");
}

double parse_decimal(std::string_view s, std::string_view field,
                     std::string_view whole) {
  s = trim(s);
  if (s.empty()) fail(field, whole, "empty number");
  if (s.front() == '+') s.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    fail(field, whole, "not a number");
  }
  if (!std::isfinite(value)) fail(field, whole, "not finite");
  return value;
}

// term := decimal | "√" decimal | "sqrt(" decimal ")"
double parse_term(std::string_view s, std::string_view field,
                  std::string_view whole) {
  s = trim(s);
  constexpr std::string_view kRoot = "√";
  bool root = false;
  if (s.starts_with(kRoot)) {
    root = true;
    s.remove_prefix(kRoot.size());
  } else if (s.starts_with("sqrt(") && s.ends_with(")")) {
    root = true;
    s = s.substr(5, s.size() - 6);
  } else if (s.starts_with("sqrt")) {
    root = true;
    s.remove_prefix(4);
  }
  const double x = parse_decimal(s, field, whole);
  if (!root) return x;
  if (x < 0.0) fail(field, whole, "square root of a negative number");
  return std::sqrt(x);
}

}  // namespace

double parse_real(std::string_view text, std::string_view field) {
  std::string_view s = trim(text);
  double sign = 1.0;
  if (s.starts_with("-")) {
    sign = -1.0;
    s.remove_prefix(1);
  }
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return sign * parse_term(s, field, text);
  const double num = parse_term(s.substr(0, slash), field, text);
  const double den = parse_term(s.substr(slash + 1), field, text);
  if (den == 0.0) fail(field, text, "zero denominator");
  return sign * num / den;
}

Vec3 parse_vec3(std::string_view text, std::string_view field) {
  Vec3 out{};
  std::size_t start = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    const auto comma = text.find(',', start);
    const bool last = i == 2;
    if (last != (comma == std::string_view::npos)) {
      fail(field, text, "expected exactly three comma-separated values");
    }
    const auto piece = text.substr(start, last ? std::string_view::npos : comma - start);
    out[i] = parse_real(piece, std::string(field) + "[" + std::to_string(i + 1) + "]");
    start = comma + 1;
  }
  return out;
}

}  // namespace tripath
