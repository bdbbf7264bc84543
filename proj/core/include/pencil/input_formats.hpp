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

#ifndef PENCIL_INPUT_FORMATS_HPP
#define PENCIL_INPUT_FORMATS_HPP

#include <string>
#include <string_view>

#include "pencil/certifier.hpp"
#include "pencil/derive.hpp"
#include "pencil/polynomial.hpp"

namespace pencil {

// Line-oriented input files. Blank lines and lines starting with '#' are
// ignored. Every syntax error is an Error(ParseError) (or BadVariable)
// whose position is a byte offset into the whole text.
//
// Triple file:   f2 = <poly>, f3 = <poly>, f4 = <poly>, each exactly once.
// Factor file:   unit = <rational>, then any number of
//                factor = <poly> ^ <multiplicity>
//                (the last '^' on the line separates the multiplicity).
// Polynomial file: the whole text is one polynomial.
Triple parse_triple_text(std::string_view text);
FactorList parse_factor_text(std::string_view text);
Polynomial parse_poly_text(std::string_view text);

// Reads a whole file; throws std::runtime_error if it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace pencil

#endif  // PENCIL_INPUT_FORMATS_HPP
