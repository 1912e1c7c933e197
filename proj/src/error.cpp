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

#include "tripath/error.hpp"

namespace tripath {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::DegeneratePair: return "DegeneratePair";
    case ErrorKind::InvalidReflectivity: return "InvalidReflectivity";
    case ErrorKind::UnknownPath: return "UnknownPath";
    case ErrorKind::TableInconsistency: return "TableInconsistency";
    case ErrorKind::UnknownPattern: return "UnknownPattern";
    case ErrorKind::UnsupportedFormat: return "UnsupportedFormat";
    case ErrorKind::IOFailure: return "IOFailure";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace tripath
