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

#include "pencil/quotient.hpp"

#include <stdexcept>

#include "pencil/error.hpp"

namespace pencil {

namespace {

void check_modulus(const Polynomial& q) {
  if (q.is_constant()) throw Error(ErrorCode::BadModulus, "modulus must have degree >= 1");
}

void check_same_modulus(const QuotientElement& a, const QuotientElement& b) {
  if (a.modulus() != b.modulus()) {
    throw std::invalid_argument("quotient elements have different moduli");
  }
}

}  // namespace

QuotientElement::QuotientElement(const Polynomial& value, const Polynomial& modulus)
    : modulus_(modulus) {
  check_modulus(modulus);
  rep_ = rem(value, modulus);
}

QuotientElement QuotientElement::operator-() const {
  return QuotientElement(Canonical{}, -rep_, modulus_);
}

QuotientElement operator+(const QuotientElement& a, const QuotientElement& b) {
  check_same_modulus(a, b);
  return QuotientElement(QuotientElement::Canonical{}, a.rep_ + b.rep_, a.modulus_);
}

QuotientElement operator-(const QuotientElement& a, const QuotientElement& b) {
  check_same_modulus(a, b);
  return QuotientElement(QuotientElement::Canonical{}, a.rep_ - b.rep_, a.modulus_);
}

QuotientElement operator*(const QuotientElement& a, const QuotientElement& b) {
  check_same_modulus(a, b);
  return QuotientElement(a.rep_ * b.rep_, a.modulus_);
}

QuotientElement reduce(const Polynomial& a, const Polynomial& q) { return QuotientElement(a, q); }

QuotientElement invert(const QuotientElement& e) {
  if (e.is_zero()) throw Error(ErrorCode::NotInvertible, "zero has no inverse");
  // Invariant: r0 = s0 * e (mod q), r1 = s1 * e (mod q).
  Polynomial r0 = e.modulus();
  Polynomial r1 = e.rep();
  Polynomial s0;
  Polynomial s1(Rational(1));
  while (!r1.is_zero()) {
    DivRem qr = divrem(r0, r1);
    Polynomial s2 = s0 - qr.quotient * s1;
    r0 = std::move(r1);
    r1 = std::move(qr.remainder);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (!r0.is_constant()) {
    throw Error(ErrorCode::NotInvertible, "element shares a factor with the modulus");
  }
  return QuotientElement(s0 * (1 / r0.leading()), e.modulus());
}

bool residues_independent(const Polynomial& a, const Polynomial& b, const Polynomial& q) {
  QuotientElement ra = reduce(a, q);
  QuotientElement rb = reduce(b, q);
  const std::size_t d = q.degree().value();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      Rational minor = ra.rep().coeff(i) * rb.rep().coeff(j) - ra.rep().coeff(j) * rb.rep().coeff(i);
      if (minor != 0) return true;
    }
  }
  return false;
}

std::optional<LinearRelation> residue_relation(const Polynomial& a, const Polynomial& b,
                                               const Polynomial& q) {
  if (residues_independent(a, b, q)) return std::nullopt;
  QuotientElement ra = reduce(a, q);
  QuotientElement rb = reduce(b, q);
  if (ra.is_zero()) return LinearRelation{Rational(1), Rational(0)};
  const auto& ac = ra.rep().coefficients();
  std::size_t k = 0;
  while (ac[k] == 0) ++k;
  return LinearRelation{rb.rep().coeff(k) / ac[k], Rational(-1)};
}

}  // namespace pencil
