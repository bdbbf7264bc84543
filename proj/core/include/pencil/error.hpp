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

#ifndef PENCIL_ERROR_HPP
#define PENCIL_ERROR_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pencil {

enum class ErrorCode {
  ZeroDivisor,
  GcdOfZeros,
  FormalDegreeTooSmall,
  FormalDegreeMismatch,
  DiscriminantUndefined,
  NotSquarefree,
  ParseError,
  BadVariable,
  BadModulus,
  NotInvertible,
  DegreeBound,
  DegreeMismatch,
  NotSeparable,
  DependentPencil,
  NotAFactor,
  ZeroT,
  DegreeOutOfRange,
  NotIrreducibleCubic,
  PreconditionFailed,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library. what() reads "<Code>: <detail>".
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail,
        std::optional<std::size_t> position = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

  // Byte offset into the parsed text, for syntax errors.
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  ErrorCode code_;
  std::string detail_;
  std::optional<std::size_t> position_;
};

}  // namespace pencil

#endif  // PENCIL_ERROR_HPP
