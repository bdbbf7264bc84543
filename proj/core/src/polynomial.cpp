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

#include "pencil/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "int_poly.hpp"
#include "pencil/error.hpp"

namespace pencil {

std::size_t Degree::value() const {
  if (!finite_) throw std::logic_error("degree of the zero polynomial has no value");
  return value_;
}

Polynomial::Polynomial(const Rational& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

Polynomial::Polynomial(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) {
  trim();
}

Polynomial Polynomial::monomial(const Rational& c, std::size_t power) {
  Polynomial p;
  if (c == 0) return p;
  p.coeffs_.assign(power + 1, Rational(0));
  p.coeffs_.back() = c;
  return p;
}

Degree Polynomial::degree() const noexcept {
  if (coeffs_.empty()) return Degree::minus_infinity();
  return Degree(coeffs_.size() - 1);
}

Rational Polynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

const Rational& Polynomial::leading() const {
  if (coeffs_.empty()) throw Error(ErrorCode::ZeroDivisor, "leading coefficient of zero polynomial");
  return coeffs_.back();
}

Rational Polynomial::operator()(const Rational& at) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& rhs) {
  if (rhs == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= rhs;
  return *this;
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial derivative(const Polynomial& p) {
  const auto& c = p.coefficients();
  if (c.size() <= 1) return {};
  std::vector<Rational> out(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) out[i - 1] = c[i] * static_cast<unsigned long>(i);
  return Polynomial(std::move(out));
}

Polynomial pow(const Polynomial& p, unsigned long exponent) {
  Polynomial result(Rational(1));
  Polynomial base = p;
  while (exponent > 0) {
    if (exponent & 1UL) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

Polynomial compose(const Polynomial& p, const Polynomial& q) {
  Polynomial acc;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * q + Polynomial(*it);
  }
  return acc;
}

DivRem divrem(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroDivisor, "division by the zero polynomial");
  if (a.degree() < b.degree()) return {Polynomial(), a};

  std::vector<Rational> r = a.coefficients();
  const auto& d = b.coefficients();
  const std::size_t db = d.size() - 1;
  const Rational inv_lead = 1 / d.back();
  std::vector<Rational> q(r.size() - db, Rational(0));
  for (std::size_t k = r.size(); k-- > db;) {
    if (r[k] == 0) continue;
    Rational factor = r[k] * inv_lead;
    q[k - db] = factor;
    for (std::size_t j = 0; j <= db; ++j) r[k - db + j] -= factor * d[j];
  }
  r.resize(db);
  return {Polynomial(std::move(q)), Polynomial(std::move(r))};
}

Polynomial rem(const Polynomial& a, const Polynomial& b) { return divrem(a, b).remainder; }

bool divides(const Polynomial& divisor, const Polynomial& p) {
  return rem(p, divisor).is_zero();
}

Polynomial monic(const Polynomial& p) {
  if (p.is_zero()) return p;
  return p * (1 / p.leading());
}

bool proportional(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return true;
  if (a.degree() != b.degree()) return false;
  return monic(a) == monic(b);
}

PrimitiveForm primitive_form(const Polynomial& p) {
  if (p.is_zero()) return {Rational(0), {}};
  Integer den_lcm = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  detail::IntPoly ints;
  ints.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) {
    Integer v = c.get_num() * (den_lcm / c.get_den());
    ints.push_back(v);
  }
  Integer cont = detail::content(ints);
  if (ints.back() < 0) cont = -cont;
  detail::divide_exact(ints, cont);
  Rational scale(cont, den_lcm);
  scale.canonicalize();
  return {scale, std::move(ints)};
}

Polynomial from_integers(const std::vector<Integer>& coefficients) {
  std::vector<Rational> c;
  c.reserve(coefficients.size());
  for (const auto& v : coefficients) c.emplace_back(v);
  return Polynomial(std::move(c));
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() && b.is_zero()) throw Error(ErrorCode::GcdOfZeros, "gcd of two zero polynomials");
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);

  detail::IntPoly u = primitive_form(a).coefficients;
  detail::IntPoly v = primitive_form(b).coefficients;
  if (u.size() < v.size()) std::swap(u, v);
  while (!v.empty()) {
    if (v.size() == 1) return Polynomial(Rational(1));
    detail::IntPoly r = detail::primitive_part(detail::pseudo_remainder(u, v));
    u = std::move(v);
    v = std::move(r);
  }
  return monic(from_integers(u));
}

Polynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: size mismatch");
  const std::size_t n = xs.size();
  std::vector<Rational> dd = ys;
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      Rational span = xs[i] - xs[i - level];
      if (span == 0) throw std::invalid_argument("interpolate: repeated abscissa");
      dd[i] = (dd[i] - dd[i - 1]) / span;
    }
  }
  // Horner on the Newton form.
  Polynomial acc;
  for (std::size_t k = n; k-- > 0;) {
    acc = acc * Polynomial{-xs[k], Rational(1)} + Polynomial(dd[k]);
  }
  return acc;
}

namespace detail {

Integer content(const IntPoly& p) {
  Integer g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.empty()) return p;
  IntPoly out = p;
  Integer c = content(out);
  if (out.back() < 0) c = -c;
  divide_exact(out, c);
  return out;
}

IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
  assert(!b.empty());
  const std::ptrdiff_t db = degree(b);
  const Integer& lb = b.back();
  std::ptrdiff_t steps = degree(a) - db + 1;
  if (steps <= 0) return a;
  // Each elimination step multiplies the running remainder by lc(b); the
  // missing factors are applied at the end so the exponent is exactly
  // deg a - deg b + 1.
  std::ptrdiff_t used = 0;
  while (!a.empty() && degree(a) >= db) {
    Integer lead = a.back();
    std::ptrdiff_t shift = degree(a) - db;
    for (auto& c : a) c *= lb;
    for (std::ptrdiff_t j = 0; j <= db; ++j) a[shift + j] -= lead * b[j];
    trim(a);
    ++used;
  }
  if (used < steps) {
    Integer f = pow(lb, static_cast<unsigned long>(steps - used));
    for (auto& c : a) c *= f;
  }
  return a;
}

void divide_exact(IntPoly& p, const Integer& d) {
  if (d == 1) return;
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
}

}  // namespace detail

}  // namespace pencil
