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

#ifndef PENCIL_CERTIFIER_HPP
#define PENCIL_CERTIFIER_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pencil/polynomial.hpp"
#include "pencil/quotient.hpp"

namespace pencil {

struct Factor {
  Polynomial poly;
  unsigned multiplicity = 1;
};

struct FactorList {
  Rational unit = 1;
  std::vector<Factor> factors;
};

// unit * prod factor^multiplicity == p, by exact multiplication.
bool verify_factorization(const Polynomial& p, const FactorList& fl);

// Irreducibility over Q for degrees 1..3: quadratics by the discriminant,
// cubics by the rational root test. Throws Error(DegreeOutOfRange)
// otherwise.
bool irreducible_le3(const Polynomial& p);

// Degree of the splitting field of an irreducible cubic: 6 when the
// discriminant is not a rational square, else 3. Throws
// Error(NotIrreducibleCubic).
int cubic_splitting_degree(const Polynomial& g);

enum class FieldIntersection { TrivialQ, NotTrivial, Inconclusive };

std::string_view to_string(FieldIntersection f) noexcept;

// Whether Q(a) and Q(b) meet only in Q, for a a root of F1 and b a root of
// F2 with a != b. Equal arguments mean two distinct roots of the same
// polynomial. Both inputs must be irreducible of degree 1, 2 or 3
// (Error(DegreeOutOfRange) otherwise). Two distinct cubics are
// Inconclusive.
FieldIntersection fields_intersect_trivially(const Polynomial& f1, const Polynomial& f2);

enum class Verdict { Certified, Refuted, Inconclusive };

std::string_view to_string(Verdict v) noexcept;

struct Preconditions {
  bool factorization = false;
  bool irreducible_factors = false;
  bool squarefree_factors = false;  // multiplicities 1, pairwise distinct
  bool coprime_ab = false;
  bool p_separable = false;
  bool degree_bounds = false;
  std::size_t m = 0;  // deg P
  std::size_t n = 0;  // max(deg A, deg B)
};

// One unordered class of root pairs: both roots in `first` when first ==
// second, otherwise one root in each.
struct CaseEntry {
  std::string first;
  std::string second;
  std::string rule;
  bool ruled_out = false;
  std::vector<std::pair<std::string, std::string>> evidence;
};

struct RefutationWitness {
  Rational s;
  Rational t;
  std::string first;
  std::string second;
};

struct Certificate {
  Verdict verdict = Verdict::Inconclusive;
  Preconditions preconditions;
  std::vector<CaseEntry> case_table;  // sorted by (first, second)
  std::optional<RefutationWitness> witness;
  std::vector<std::string> notes;
};

// Rules every class of root pairs (alpha != beta) of the factored
// polynomial out of being common roots of a nonzero combination aA + bB.
// Assumes the factorization itself was verified; checks the remaining
// preconditions (factors of degree <= 3 irreducible, multiplicity 1,
// pairwise distinct, gcd(A, B) = 1) and throws Error(PreconditionFailed)
// naming the first one that fails.
Certificate pair_class_analysis(const FactorList& fl, const Polynomial& a, const Polynomial& b);

// verify_factorization, then pair_class_analysis. A Certified verdict means
// phi(P, A, B, deg P, max(deg A, deg B)) is nonzero.
Certificate certify(const Polynomial& p, const Polynomial& a, const Polynomial& b,
                    const FactorList& fl);

}  // namespace pencil

#endif  // PENCIL_CERTIFIER_HPP
