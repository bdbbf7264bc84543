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

#include "pencil/resultant.hpp"

#include "int_poly.hpp"
#include "pencil/error.hpp"
#include "pencil/matrix.hpp"

namespace pencil {

namespace {

using detail::IntPoly;

// Res(A, B) for primitive integer polynomials, both nonzero.
Integer subresultant_int(IntPoly a, IntPoly b) {
  int s = 1;
  if (detail::degree(a) < detail::degree(b)) {
    if ((detail::degree(a) % 2 == 1) && (detail::degree(b) % 2 == 1)) s = -s;
    std::swap(a, b);
  }
  if (detail::degree(b) == 0) {
    return s * pow(b.back(), static_cast<unsigned long>(detail::degree(a)));
  }
  Integer g = 1;
  Integer h = 1;
  for (;;) {
    const std::ptrdiff_t da = detail::degree(a);
    const std::ptrdiff_t db = detail::degree(b);
    const auto delta = static_cast<unsigned long>(da - db);
    if ((da % 2 == 1) && (db % 2 == 1)) s = -s;
    IntPoly r = detail::pseudo_remainder(a, b);
    a = std::move(b);
    b = std::move(r);
    if (b.empty()) return 0;
    detail::divide_exact(b, g * pow(h, delta));
    g = a.back();
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      Integer num = pow(g, delta);
      Integer den = pow(h, delta - 1);
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    if (detail::degree(b) == 0) break;
  }
  const auto da = static_cast<unsigned long>(detail::degree(a));
  Integer num = pow(b.back(), da);
  Integer den = pow(h, da - 1);
  Integer out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return s * out;
}

}  // namespace

Rational subresultant_resultant(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  PrimitiveForm pa = primitive_form(a);
  PrimitiveForm pb = primitive_form(b);
  const auto da = static_cast<unsigned long>(a.degree().value());
  const auto db = static_cast<unsigned long>(b.degree().value());
  Rational out(subresultant_int(std::move(pa.coefficients), std::move(pb.coefficients)));
  out *= pow(pa.scale, db);
  out *= pow(pb.scale, da);
  return out;
}

Rational sylvester_resultant(const Polynomial& a, const Polynomial& b, std::size_t formal_a,
                             std::size_t formal_b) {
  if (a.degree() > Degree(formal_a) || b.degree() > Degree(formal_b)) {
    throw Error(ErrorCode::FormalDegreeTooSmall, "formal degree below actual degree");
  }
  PrimitiveForm pa = primitive_form(a);
  PrimitiveForm pb = primitive_form(b);
  const std::size_t n = formal_a + formal_b;
  Matrix<Integer> m(n, std::vector<Integer>(n, Integer(0)));
  // Column j holds x^(n-1-j).
  for (std::size_t row = 0; row < formal_b; ++row) {
    for (std::size_t k = 0; k < pa.coefficients.size(); ++k) {
      m[row][row + formal_a - k] = pa.coefficients[k];
    }
  }
  for (std::size_t row = 0; row < formal_a; ++row) {
    for (std::size_t k = 0; k < pb.coefficients.size(); ++k) {
      m[formal_b + row][row + formal_b - k] = pb.coefficients[k];
    }
  }
  Integer det = bareiss_determinant(
      std::move(m),
      [](const Integer& x, const Integer& y) {
        Integer q;
        mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
        return q;
      },
      [](const Integer& x) { return x == 0; });
  Rational out(det);
  out *= pow(pa.scale, formal_b);
  out *= pow(pb.scale, formal_a);
  return out;
}

Rational resultant(const Polynomial& a, const Polynomial& b, std::size_t formal_a,
                   std::size_t formal_b) {
  if (a.is_zero()) throw Error(ErrorCode::FormalDegreeMismatch, "first argument is zero");
  if (a.degree() > Degree(formal_a) || b.degree() > Degree(formal_b)) {
    throw Error(ErrorCode::FormalDegreeTooSmall, "formal degree below actual degree");
  }
  if (a.degree() != Degree(formal_a)) {
    throw Error(ErrorCode::FormalDegreeMismatch,
                "first argument must have exact formal degree " + std::to_string(formal_a));
  }
  if (formal_a == 0) return pow(a.leading(), formal_b);
  if (b.is_zero()) return 0;
  Rational out = subresultant_resultant(a, b);
  out *= pow(a.leading(), formal_b - b.degree().value());
  return out;
}

Rational discriminant(const Polynomial& a) {
  if (a.is_constant()) {
    throw Error(ErrorCode::DiscriminantUndefined, "discriminant of a constant");
  }
  const std::size_t d = a.degree().value();
  Rational res = resultant(a, derivative(a), d, d - 1);
  Rational out = res / a.leading();
  if ((d * (d - 1) / 2) % 2 == 1) out = -out;
  return out;
}

bool is_separable(const Polynomial& a) {
  if (a.is_zero()) return false;
  return gcd(a, derivative(a)).is_constant();
}

}  // namespace pencil
