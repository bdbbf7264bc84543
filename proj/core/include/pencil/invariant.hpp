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

#ifndef PENCIL_INVARIANT_HPP
#define PENCIL_INVARIANT_HPP

#include <cstddef>
#include <optional>

#include "pencil/bivariate.hpp"
#include "pencil/polynomial.hpp"
#include "pencil/quotient.hpp"

namespace pencil {

// Common-factor invariant of a pencil. For separable f of exact degree m
// with roots a_1..a_m and linearly independent g, h of degree <= n,
//
//   value = lc(f)^(2(m-1)(n-1) + m(n-1)) * prod_{i != j} D(a_i, a_j),
//
// with D the Bezout difference quotient of (g, h). It vanishes exactly when
// two distinct roots of f are common roots of some s*g + t*h, i.e. when f
// shares a factor of degree >= 2 with a nonzero member of the pencil.
//
// Computed as Res_x(f, Res_y(f1, D; m-1, n-1); m, 2(m-1)(n-1)) where
// f1 = (f(y) - f(x)) / (y - x) removes the diagonal root pairs.
struct InvariantResult {
  Rational value;
  std::size_t m = 0;
  std::size_t n = 0;
  bool nonzero = false;
  std::size_t digit_count = 0;  // decimal digits of |numerator|
};

enum class InnerResultantMethod {
  // Evaluate at 2(m-1)(n-1) + 1 integer points and interpolate.
  Interpolation,
  // Bareiss elimination on the Sylvester matrix with entries in Q[x].
  PolynomialBareiss,
};

struct InvariantOptions {
  InnerResultantMethod method = InnerResultantMethod::Interpolation;
  // Worker threads for the evaluation points; the result does not depend on
  // this value.
  unsigned threads = 1;
};

// Formal x-degree of the inner resultant: 2(m-1)(n-1).
std::size_t inner_formal_degree(std::size_t m, std::size_t n);

// Res_y(f1(x, y), D(x, y)) at formal y-degrees (m-1, n-1), as a polynomial
// in x. Does not check the phi() preconditions beyond degree bounds.
Polynomial inner_resultant(const Polynomial& f, const Polynomial& g, const Polynomial& h,
                           std::size_t m, std::size_t n, const InvariantOptions& options = {});

// Errors:
//   DegreeMismatch   deg f != m
//   DegreeBound      m < 2, n < 1, or deg g / deg h > n
//   NotSeparable     gcd(f, f') is not constant
//   DependentPencil  g, h linearly dependent (this includes a zero member)
InvariantResult phi(const Polynomial& f, const Polynomial& g, const Polynomial& h,
                    std::size_t m, std::size_t n, const InvariantOptions& options = {});

// g'h - gh', the diagonal D(x, x).
Polynomial wronskian(const Polynomial& g, const Polynomial& h);

using PencilWitness = LinearRelation;

// For q | f: a pencil member s*g + t*h divisible by q, if one exists.
// Throws Error(BadModulus) when deg q < 2 and Error(NotAFactor) when q does not
// divide f.
std::optional<PencilWitness> pencil_witness_check(const Polynomial& f, const Polynomial& g,
                                                  const Polynomial& h, const Polynomial& q);

}  // namespace pencil

#endif  // PENCIL_INVARIANT_HPP
