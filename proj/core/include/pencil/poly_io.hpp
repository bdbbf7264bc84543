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

#ifndef PENCIL_POLY_IO_HPP
#define PENCIL_POLY_IO_HPP

#include <iosfwd>
#include <string>
#include <string_view>

#include "pencil/polynomial.hpp"

namespace pencil {

// Grammar (whitespace insignificant, variable is literally 'x'):
//   poly  := sign? term (('+'|'-') term)*
//   term  := coeff? ('*'? 'x' ('^' uint)?)?     (at least one part present)
//   coeff := int ('/' uint)?
// Repeated powers are summed. Syntax errors raise Error(ParseError) and a
// letter other than 'x' raises Error(BadVariable); both carry the byte
// offset into `text`.
Polynomial parse_poly(std::string_view text);

// Descending powers, zero terms omitted, "x" for x^1 and for a unit
// coefficient, "0" for the zero polynomial. parse_poly inverts it.
std::string format_poly(const Polynomial& p);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace pencil

#endif  // PENCIL_POLY_IO_HPP
