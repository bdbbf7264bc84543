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

#ifndef PENCIL_POLYNOMIAL_HPP
#define PENCIL_POLYNOMIAL_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "pencil/rational.hpp"

namespace pencil {

// Degree of a univariate polynomial. The zero polynomial has degree minus
// infinity, which compares below every finite degree and has no value().
class Degree {
 public:
  constexpr Degree(std::size_t d) noexcept : finite_(true), value_(d) {}  // NOLINT
  static constexpr Degree minus_infinity() noexcept { return Degree(); }

  constexpr bool is_finite() const noexcept { return finite_; }
  std::size_t value() const;

  constexpr auto operator<=>(const Degree&) const noexcept = default;

 private:
  constexpr Degree() noexcept : finite_(false), value_(0) {}
  // Member order matters for the defaulted comparison.
  bool finite_;
  std::size_t value_;
};

// Dense univariate polynomial over Q. Coefficient i belongs to x^i; the
// highest stored coefficient is never zero, and the zero polynomial stores
// nothing.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& constant);  // NOLINT
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<Rational> coefficients);

  static Polynomial monomial(const Rational& c, std::size_t power);
  static Polynomial x() { return monomial(1, 1); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  Degree degree() const noexcept;

  // Coefficient of x^i; zero past the end.
  Rational coeff(std::size_t i) const;
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  // Throws Error(ZeroDivisor) for the zero polynomial.
  const Rational& leading() const;

  Rational operator()(const Rational& at) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& rhs);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator*(Polynomial lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Polynomial operator*(const Rational& lhs, Polynomial rhs) { return rhs *= lhs; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

Polynomial derivative(const Polynomial& p);
Polynomial pow(const Polynomial& p, unsigned long exponent);
// p(q(x)).
Polynomial compose(const Polynomial& p, const Polynomial& q);

struct DivRem {
  Polynomial quotient;
  Polynomial remainder;
};

// a = b*quotient + remainder with deg(remainder) < deg(b).
// Throws Error(ZeroDivisor) when b is zero.
DivRem divrem(const Polynomial& a, const Polynomial& b);
Polynomial rem(const Polynomial& a, const Polynomial& b);
bool divides(const Polynomial& divisor, const Polynomial& p);

// Leading coefficient scaled to 1; zero stays zero.
Polynomial monic(const Polynomial& p);

// Monic gcd via a primitive-part remainder sequence over Z.
// Throws Error(GcdOfZeros) when both arguments are zero.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

// True when one polynomial is a rational multiple of the other, or either
// is zero.
bool proportional(const Polynomial& a, const Polynomial& b);

// p = scale * integer polynomial with coprime integer coefficients and
// positive leading coefficient. The zero polynomial gives scale 0.
struct PrimitiveForm {
  Rational scale;
  std::vector<Integer> coefficients;
};
PrimitiveForm primitive_form(const Polynomial& p);

// Newton interpolation through (xs[i], ys[i]); the xs must be distinct.
Polynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);
Polynomial from_integers(const std::vector<Integer>& coefficients);

}  // namespace pencil

#endif  // PENCIL_POLYNOMIAL_HPP
