// Copyright 2026 The pencil Authors.
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

#include "pencil/error.hpp"

namespace pencil {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ZeroDivisor: return "ZeroDivisor";
    case ErrorCode::GcdOfZeros: return "GcdOfZeros";
    case ErrorCode::FormalDegreeTooSmall: return "FormalDegreeTooSmall";
    case ErrorCode::FormalDegreeMismatch: return "FormalDegreeMismatch";
    case ErrorCode::DiscriminantUndefined: return "DiscriminantUndefined";
    case ErrorCode::NotSquarefree: return "NotSquarefree";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::BadVariable: return "BadVariable";
    case ErrorCode::BadModulus: return "BadModulus";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::DegreeBound: return "DegreeBound";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::NotSeparable: return "NotSeparable";
    case ErrorCode::DependentPencil: return "DependentPencil";
    case ErrorCode::NotAFactor: return "NotAFactor";
    case ErrorCode::ZeroT: return "ZeroT";
    case ErrorCode::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorCode::NotIrreducibleCubic: return "NotIrreducibleCubic";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
  }
  return "Unknown";
}

namespace {

std::string compose_message(ErrorCode code, const std::string& detail,
                            std::optional<std::size_t> position) {
  std::string msg(to_string(code));
  if (!detail.empty()) {
    msg += ": ";
    msg += detail;
  }
  if (position) {
    msg += " (at byte " + std::to_string(*position) + ")";
  }
  return msg;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& detail,
             std::optional<std::size_t> position)
    : std::runtime_error(compose_message(code, detail, position)),
      code_(code),
      detail_(detail),
      position_(position) {}

}  // namespace pencil
