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

#ifndef PENCIL_QUOTIENT_HPP
#define PENCIL_QUOTIENT_HPP

#include <optional>

#include "pencil/polynomial.hpp"

namespace pencil {

// Residue class in Q[x]/(modulus). The representative is always the
// canonical remainder, so two elements are equal iff their reps are.
// Irreducibility of the modulus is not re-checked here; invert() only
// succeeds when the element is coprime to it.
class QuotientElement {
 public:
  // Throws Error(BadModulus) for a constant modulus.
  QuotientElement(const Polynomial& value, const Polynomial& modulus);

  const Polynomial& modulus() const noexcept { return modulus_; }
  const Polynomial& rep() const noexcept { return rep_; }
  bool is_zero() const noexcept { return rep_.is_zero(); }

  QuotientElement operator-() const;
  friend QuotientElement operator+(const QuotientElement& a, const QuotientElement& b);
  friend QuotientElement operator-(const QuotientElement& a, const QuotientElement& b);
  friend QuotientElement operator*(const QuotientElement& a, const QuotientElement& b);

  friend bool operator==(const QuotientElement&, const QuotientElement&) = default;

 private:
  struct Canonical {};
  QuotientElement(Canonical, Polynomial rep, Polynomial modulus)
      : modulus_(std::move(modulus)), rep_(std::move(rep)) {}

  Polynomial modulus_;
  Polynomial rep_;
};

QuotientElement reduce(const Polynomial& a, const Polynomial& q);

// Extended Euclid. Throws Error(NotInvertible) for zero or for an element
// sharing a factor with the modulus.
QuotientElement invert(const QuotientElement& e);

// Rank of the 2 x deg(q) matrix of reduced coefficient vectors is 2, i.e.
// no (s, t) != (0, 0) over any field containing Q makes s*a + t*b vanish
// mod q. Decided through exact 2x2 minors.
bool residues_independent(const Polynomial& a, const Polynomial& b, const Polynomial& q);

// s*a + t*b = 0 (mod q) with (s, t) != (0, 0).
struct LinearRelation {
  Rational s;
  Rational t;
};

// A relation when the residues are dependent: (1, 0) if a = 0 mod q, else
// (lambda, -1) with b = lambda*a mod q.
std::optional<LinearRelation> residue_relation(const Polynomial& a, const Polynomial& b,
                                               const Polynomial& q);

}  // namespace pencil

#endif  // PENCIL_QUOTIENT_HPP
