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

#include <string>
#include <vector>

namespace tripath {

struct CheckResult {
  std::string group;
  std::string name;
  bool passed;
  std::string detail;
};

/// Re-derives the published values (closed-form states, Hardy values,
/// inequality sums, KD tables, extremal bounds, joint-basis fidelities,
/// classification memberships, atlas coverage) and compares each one with
/// its reference value.
std::vector<CheckResult> run_selfchecks();

}  // namespace tripath
