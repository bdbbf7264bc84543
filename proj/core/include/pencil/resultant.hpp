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

#ifndef PENCIL_RESULTANT_HPP
#define PENCIL_RESULTANT_HPP

#include <cstddef>

#include "pencil/polynomial.hpp"

namespace pencil {

// Determinant of the (formal_a + formal_b)-square Sylvester matrix. The
// first argument must have exact degree formal_a; b may drop below
// formal_b, in which case the result is lc(a)^(formal_b - deg b) times the
// exact-degree resultant.
//   FormalDegreeTooSmall  a formal degree is below the actual degree
//   FormalDegreeMismatch  formal_a exceeds deg(a), or a is zero
Rational resultant(const Polynomial& a, const Polynomial& b, std::size_t formal_a,
                   std::size_t formal_b);

// Independent route: Bareiss determinant of the explicit Sylvester matrix.
// Accepts any formal degrees at or above the actual ones (both may drop).
Rational sylvester_resultant(const Polynomial& a, const Polynomial& b, std::size_t formal_a,
                             std::size_t formal_b);

// Exact-degree resultant through the fraction-free subresultant remainder
// sequence over Z. Zero if either argument is zero.
Rational subresultant_resultant(const Polynomial& a, const Polynomial& b);

// (-1)^(d(d-1)/2) * Res(a, a') / lc(a), d = deg a.
// Throws Error(DiscriminantUndefined) for constants.
Rational discriminant(const Polynomial& a);

// gcd(a, a') is constant. Nonzero constants count as separable; the zero
// polynomial does not.
bool is_separable(const Polynomial& a);

}  // namespace pencil

#endif  // PENCIL_RESULTANT_HPP
