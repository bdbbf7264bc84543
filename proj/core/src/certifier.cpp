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

#include "pencil/certifier.hpp"

#include <algorithm>
#include <stdexcept>

#include "pencil/error.hpp"
#include "pencil/poly_io.hpp"
#include "pencil/resultant.hpp"

namespace pencil {

bool verify_factorization(const Polynomial& p, const FactorList& fl) {
  Polynomial product(fl.unit);
  for (const auto& f : fl.factors) product *= pow(f.poly, f.multiplicity);
  return product == p;
}

namespace {

constexpr unsigned long kMaxDivisorSearch = 10000000000000000UL;  // 1e16

std::vector<Integer> positive_divisors(const Integer& value) {
  Integer n = abs(value);
  if (n == 0) throw std::invalid_argument("divisors of zero");
  if (!n.fits_ulong_p() || n.get_ui() > kMaxDivisorSearch) {
    throw std::domain_error("coefficient too large for the rational root search");
  }
  const unsigned long v = n.get_ui();
  std::vector<Integer> small, large;
  for (unsigned long d = 1; d * d <= v; ++d) {
    if (v % d != 0) continue;
    small.emplace_back(d);
    if (d * d != v) large.emplace_back(v / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

bool has_rational_root(const Polynomial& p) {
  PrimitiveForm pf = primitive_form(p);
  const Integer& a0 = pf.coefficients.front();
  if (a0 == 0) return true;
  const Polynomial ip = from_integers(pf.coefficients);
  for (const auto& num : positive_divisors(a0)) {
    for (const auto& den : positive_divisors(pf.coefficients.back())) {
      Rational r(num, den);
      r.canonicalize();
      if (r.get_den() != den) continue;  // already tried in lowest terms
      if (ip(r) == 0 || ip(-r) == 0) return true;
    }
  }
  return false;
}

}  // namespace

bool irreducible_le3(const Polynomial& p) {
  if (p.is_constant() || p.degree() > Degree(3)) {
    throw Error(ErrorCode::DegreeOutOfRange, "irreducibility test needs 1 <= degree <= 3");
  }
  switch (p.degree().value()) {
    case 1: return true;
    case 2: return !is_rational_square(discriminant(p));
    default: return !has_rational_root(p);
  }
}

int cubic_splitting_degree(const Polynomial& g) {
  if (g.degree() != Degree(3) || !irreducible_le3(g)) {
    throw Error(ErrorCode::NotIrreducibleCubic, "expected an irreducible cubic");
  }
  return is_rational_square(discriminant(g)) ? 3 : 6;
}

std::string_view to_string(FieldIntersection f) noexcept {
  switch (f) {
    case FieldIntersection::TrivialQ: return "TRIVIAL_Q";
    case FieldIntersection::NotTrivial: return "NOT_TRIVIAL";
    case FieldIntersection::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Certified: return "CERTIFIED";
    case Verdict::Refuted: return "REFUTED";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

FieldIntersection fields_intersect_trivially(const Polynomial& f1, const Polynomial& f2) {
  for (const auto* f : {&f1, &f2}) {
    if (f->is_constant() || f->degree() > Degree(3)) {
      throw Error(ErrorCode::DegreeOutOfRange, "field rule needs degrees 1, 2 or 3");
    }
  }
  const std::size_t d1 = f1.degree().value();
  const std::size_t d2 = f2.degree().value();
  if (d1 == 1 || d2 == 1) return FieldIntersection::TrivialQ;
  // [Q(a) n Q(b) : Q] divides gcd(2, 3) = 1.
  if (d1 != d2) return FieldIntersection::TrivialQ;
  const bool same = proportional(f1, f2);
  if (d1 == 2) {
    // Conjugate roots of one quadratic generate the same field.
    if (same) return FieldIntersection::NotTrivial;
    return is_rational_square(discriminant(f1) * discriminant(f2)) ? FieldIntersection::NotTrivial
                                                                    : FieldIntersection::TrivialQ;
  }
  if (same) {
    return cubic_splitting_degree(f1) == 6 ? FieldIntersection::TrivialQ
                                           : FieldIntersection::NotTrivial;
  }
  return FieldIntersection::Inconclusive;
}

namespace {

struct Labeled {
  std::string id;
  Polynomial poly;
};

std::string relation_text(const LinearRelation& r) {
  return "(" + r.s.get_str() + ", " + r.t.get_str() + ")";
}

class PairAnalysis {
 public:
  PairAnalysis(const Polynomial& a, const Polynomial& b, Certificate& cert)
      : a_(a), b_(b), cert_(cert) {}

  CaseEntry same_factor(const Labeled& f) {
    CaseEntry e{f.id, f.id, {}, false, {}};
    const std::size_t d = f.poly.degree().value();
    auto relation = residue_relation(a_, b_, f.poly);
    e.evidence.emplace_back("residues_independent", relation ? "false" : "true");
    if (d == 2) {
      e.rule = "same-quadratic-residues";
      e.ruled_out = !relation;
    } else {
      e.rule = "same-cubic-galois-and-residues";
      const int split = cubic_splitting_degree(f.poly);
      e.evidence.emplace_back("splitting_degree", std::to_string(split));
      e.ruled_out = !relation && split == 6;
    }
    if (relation) record_witness(*relation, f.id, f.id, e);
    return e;
  }

  CaseEntry cross(const Labeled& f1, const Labeled& f2) {
    CaseEntry e{f1.id, f2.id, {}, false, {}};
    const std::size_t d1 = f1.poly.degree().value();
    const std::size_t d2 = f2.poly.degree().value();
    if (d1 == 1 && d2 == 1) {
      e.rule = "linear-pair-determinant";
      const Rational alpha = -f1.poly.coeff(0) / f1.poly.coeff(1);
      const Rational beta = -f2.poly.coeff(0) / f2.poly.coeff(1);
      const Rational det = a_(alpha) * b_(beta) - a_(beta) * b_(alpha);
      e.evidence.emplace_back("determinant", det.get_str());
      e.ruled_out = det != 0;
      if (!e.ruled_out) {
        record_witness(LinearRelation{b_(alpha), -a_(alpha)}, f1.id, f2.id, e);
      }
      return e;
    }
    e.rule = "cross-field-intersection-and-residues";
    FieldIntersection fi = fields_intersect_trivially(f1.poly, f2.poly);
    e.evidence.emplace_back("field_intersection", std::string(to_string(fi)));
    bool independent = true;
    for (const auto* f : {&f1, &f2}) {
      if (f->poly.degree() < Degree(2)) continue;
      const bool ind = residues_independent(a_, b_, f->poly);
      e.evidence.emplace_back("residues_independent_mod_" + f->id, ind ? "true" : "false");
      independent = independent && ind;
    }
    if (fi == FieldIntersection::Inconclusive) inconclusive_ = true;
    e.ruled_out = fi == FieldIntersection::TrivialQ && independent;
    return e;
  }

  CaseEntry unsupported(const Labeled& f1, const Labeled& f2) {
    inconclusive_ = true;
    return CaseEntry{f1.id, f2.id, "unsupported-degree", false,
                     {{"reason", "factor of degree >= 4"}}};
  }

  bool inconclusive() const { return inconclusive_; }

 private:
  void record_witness(const LinearRelation& r, const std::string& first,
                      const std::string& second, CaseEntry& e) {
    e.evidence.emplace_back("witness", relation_text(r));
    if (!cert_.witness) cert_.witness = RefutationWitness{r.s, r.t, first, second};
  }

  const Polynomial& a_;
  const Polynomial& b_;
  Certificate& cert_;
  bool inconclusive_ = false;
};

[[noreturn]] void precondition_failed(const std::string& what) {
  throw Error(ErrorCode::PreconditionFailed, what);
}

}  // namespace

Certificate pair_class_analysis(const FactorList& fl, const Polynomial& a, const Polynomial& b) {
  Certificate cert;
  auto& pre = cert.preconditions;

  if (a.is_zero() || b.is_zero()) precondition_failed("degree-bounds: A and B must be nonzero");
  std::vector<Labeled> factors;
  for (const auto& f : fl.factors) {
    if (f.poly.is_constant()) precondition_failed("factor-degree: constant factor in list");
    if (f.multiplicity != 1) {
      precondition_failed("multiplicity: factor " + format_poly(f.poly) + " has multiplicity " +
                          std::to_string(f.multiplicity));
    }
    if (f.poly.degree() <= Degree(3) && !irreducible_le3(f.poly)) {
      precondition_failed("irreducibility: factor " + format_poly(f.poly) + " is reducible");
    }
    factors.push_back({format_poly(f.poly), f.poly});
  }
  std::sort(factors.begin(), factors.end(), [](const Labeled& l, const Labeled& r) {
    if (l.poly.degree() != r.poly.degree()) return l.poly.degree() < r.poly.degree();
    return l.id < r.id;
  });
  for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
    for (std::size_t j = i + 1; j < factors.size(); ++j) {
      if (proportional(factors[i].poly, factors[j].poly)) {
        precondition_failed("distinct-factors: " + factors[i].id + " and " + factors[j].id +
                            " are proportional");
      }
    }
  }
  if (!gcd(a, b).is_constant()) precondition_failed("coprime: gcd(A, B) is not constant");

  pre.irreducible_factors = true;
  pre.squarefree_factors = true;
  pre.coprime_ab = true;
  pre.n = std::max(a.degree().value(), b.degree().value());

  PairAnalysis analysis(a, b, cert);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (std::size_t j = i; j < factors.size(); ++j) {
      const auto& f1 = factors[i];
      const auto& f2 = factors[j];
      const bool big = f1.poly.degree() > Degree(3) || f2.poly.degree() > Degree(3);
      if (i == j) {
        if (f1.poly.degree() == Degree(1)) continue;  // a single root
        cert.case_table.push_back(big ? analysis.unsupported(f1, f2) : analysis.same_factor(f1));
      } else {
        cert.case_table.push_back(big ? analysis.unsupported(f1, f2) : analysis.cross(f1, f2));
      }
    }
  }

  const bool all_ruled_out =
      std::all_of(cert.case_table.begin(), cert.case_table.end(),
                  [](const CaseEntry& e) { return e.ruled_out; });
  if (cert.witness) {
    cert.verdict = Verdict::Refuted;
    cert.notes.push_back("witness pencil member s*A + t*B vanishes at a root pair of P");
  } else if (all_ruled_out && !analysis.inconclusive()) {
    cert.verdict = Verdict::Certified;
  } else {
    cert.verdict = Verdict::Inconclusive;
    if (analysis.inconclusive()) {
      cert.notes.push_back("some pair class lies outside the supported field rules");
    } else {
      cert.notes.push_back("some pair class could not be ruled out");
    }
  }
  return cert;
}

Certificate certify(const Polynomial& p, const Polynomial& a, const Polynomial& b,
                    const FactorList& fl) {
  if (!verify_factorization(p, fl)) {
    precondition_failed("factorization: unit * product of factors differs from P");
  }
  if (p.degree() < Degree(2)) precondition_failed("degree-bounds: deg P must be >= 2");
  Certificate cert = pair_class_analysis(fl, a, b);
  cert.preconditions.factorization = true;
  cert.preconditions.m = p.degree().value();
  cert.preconditions.degree_bounds = true;
  // Distinct irreducible factors of multiplicity one force separability.
  cert.preconditions.p_separable = is_separable(p);
  if (!cert.preconditions.p_separable) {
    throw std::logic_error("verified squarefree factorization of a non-separable polynomial");
  }
  cert.notes.push_back("conclusion applies to phi(P, A, B, " + std::to_string(cert.preconditions.m) +
                       ", " + std::to_string(cert.preconditions.n) + ")");
  return cert;
}

}  // namespace pencil
