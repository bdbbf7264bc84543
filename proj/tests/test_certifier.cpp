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

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "pencil/certifier.hpp"
#include "pencil/error.hpp"
#include "pencil/invariant.hpp"
#include "pencil/paper_constants.hpp"
#include "pencil/poly_io.hpp"
#include "pencil/resultant.hpp"
#include "test_support.hpp"

namespace pencil {
namespace {

using testing::Gen;

Polynomial P(const char* s) { return parse_poly(s); }

std::string precondition_message(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PreconditionFailed);
    return e.detail();
  }
  return "";
}

TEST(VerifyFactorization, Examples) {
  const auto& pc = paper_constants();
  EXPECT_TRUE(verify_factorization(pc.P, pc.p_factors));
  EXPECT_TRUE(verify_factorization(P("x^2-1"), {Rational(1), {{P("x-1"), 1}, {P("x+1"), 1}}}));
  FactorList wrong = pc.p_factors;
  wrong.unit = 2;
  EXPECT_FALSE(verify_factorization(pc.P, wrong));
  EXPECT_TRUE(verify_factorization(P("x^2-2x+1"), {Rational(1), {{P("x-1"), 2}}}));
  EXPECT_EQ(pc.p_factors.unit, Rational(4));
  ASSERT_EQ(pc.p_factors.factors.size(), 4u);
}

TEST(Irreducible, Examples) {
  EXPECT_TRUE(irreducible_le3(P("2x^2+x+1")));
  EXPECT_TRUE(irreducible_le3(P("x^2-2x+2")));
  EXPECT_TRUE(irreducible_le3(P("7x^3-3x^2+21x-5")));
  EXPECT_TRUE(irreducible_le3(P("x+1")));
  EXPECT_FALSE(irreducible_le3(P("x^2-1")));
  EXPECT_FALSE(irreducible_le3(P("x^2-2x+1")));
  EXPECT_TRUE(irreducible_le3(P("x^2-2")));
  EXPECT_FALSE(irreducible_le3(P("4x^2-9")));
  EXPECT_FALSE(irreducible_le3(P("6x^3-5x^2+x")));
  EXPECT_TRUE(irreducible_le3(P("1/2x^3-1")));
  EXPECT_FALSE(irreducible_le3(P("3x^3-x^2+6x-2")));  // (3x - 1)(x^2 + 2)
  EXPECT_THROW(irreducible_le3(P("x^4+1")), Error);
  EXPECT_THROW(irreducible_le3(P("5")), Error);
}

// Cubic irreducibility oracle: no root among +-(divisors of a0)/(divisors of a3).
TEST(Irreducible, RationalRootOracle) {
  Gen gen(81);
  for (int k = 0; k < 100; ++k) {
    Polynomial c = gen.poly(3, 12);
    if (c.coeff(0) == 0) continue;
    long a0 = std::abs(c.coeff(0).get_num().get_si());
    long a3 = std::abs(c.coeff(3).get_num().get_si());
    bool has_root = false;
    for (long p = 1; p <= a0; ++p) {
      if (a0 % p) continue;
      for (long q = 1; q <= a3; ++q) {
        if (a3 % q) continue;
        if (c(Rational(p, q)) == 0 || c(Rational(-p, q)) == 0) has_root = true;
      }
    }
    EXPECT_EQ(irreducible_le3(c), !has_root) << format_poly(c);
  }
}

TEST(CubicSplitting, Examples) {
  EXPECT_EQ(cubic_splitting_degree(P("7x^3-3x^2+21x-5")), 6);
  EXPECT_EQ(cubic_splitting_degree(P("x^3-3x-1")), 3);
  EXPECT_EQ(cubic_splitting_degree(P("x^3-2")), 6);
  try {
    cubic_splitting_degree(P("x^3-x"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotIrreducibleCubic);
  }
  EXPECT_THROW(cubic_splitting_degree(P("x^2+1")), Error);
}

TEST(FieldIntersection, Examples) {
  const auto& pc = paper_constants();
  EXPECT_EQ(fields_intersect_trivially(pc.q1, pc.q2), FieldIntersection::TrivialQ);
  EXPECT_EQ(fields_intersect_trivially(pc.ell, pc.g), FieldIntersection::TrivialQ);
  EXPECT_EQ(fields_intersect_trivially(pc.q1, pc.g), FieldIntersection::TrivialQ);
  EXPECT_EQ(fields_intersect_trivially(pc.q2, pc.g), FieldIntersection::TrivialQ);
  // Same quadratic field: x^2 + 1 and x^2 + 4 both give Q(i).
  EXPECT_EQ(fields_intersect_trivially(P("x^2+1"), P("x^2+4")), FieldIntersection::NotTrivial);
  EXPECT_EQ(fields_intersect_trivially(P("x^3-2"), P("x^3-3x-1")),
            FieldIntersection::Inconclusive);
  EXPECT_EQ(to_string(FieldIntersection::TrivialQ), "TRIVIAL_Q");
  EXPECT_EQ(to_string(Verdict::Certified), "CERTIFIED");
}

TEST(Certify, WorkedExampleIsCertified) {
  const auto& pc = paper_constants();
  Certificate c = certify(pc.P, pc.A, pc.B, pc.p_factors);
  EXPECT_EQ(c.verdict, Verdict::Certified);
  EXPECT_FALSE(c.witness.has_value());
  EXPECT_TRUE(c.preconditions.factorization);
  EXPECT_TRUE(c.preconditions.irreducible_factors);
  EXPECT_TRUE(c.preconditions.squarefree_factors);
  EXPECT_TRUE(c.preconditions.coprime_ab);
  EXPECT_TRUE(c.preconditions.p_separable);
  EXPECT_EQ(c.preconditions.m, 8u);
  EXPECT_EQ(c.preconditions.n, 9u);

  const std::string l = "x+1", q1 = "2x^2+x+1", q2 = "x^2-2x+2", g = "7x^3-3x^2+21x-5";
  std::set<std::set<std::string>> expected = {{l, q1}, {l, q2}, {l, g},   {q1},    {q2},
                                              {g},     {q1, q2}, {q1, g}, {q2, g}};
  std::set<std::set<std::string>> seen;
  for (const auto& e : c.case_table) {
    EXPECT_TRUE(e.ruled_out) << e.first << " / " << e.second;
    EXPECT_FALSE(e.rule.empty());
    seen.insert({e.first, e.second});
  }
  EXPECT_EQ(c.case_table.size(), 9u);
  EXPECT_EQ(seen, expected);

  std::map<std::set<std::string>, std::string> rules;
  for (const auto& e : c.case_table) rules[{e.first, e.second}] = e.rule;
  EXPECT_EQ(rules[{q1}], "same-quadratic-residues");
  EXPECT_EQ(rules[{g}], "same-cubic-galois-and-residues");
  EXPECT_EQ((rules[{q1, g}]), "cross-field-intersection-and-residues");
}

TEST(Certify, PlantedDependentResiduesRefuted) {
  const auto& pc = paper_constants();
  Gen gen(82);
  for (int k = 0; k < 5; ++k) {
    Polynomial w = k == 0 ? P("1") : gen.poly_upto(7, 5);
    Polynomial b2 = pc.A + pc.q1 * w;
    if (!gcd(pc.A, b2).is_constant()) continue;
    Certificate c = certify(pc.P, pc.A, b2, pc.p_factors);
    EXPECT_EQ(c.verdict, Verdict::Refuted);
    ASSERT_TRUE(c.witness.has_value());
    EXPECT_EQ(c.witness->first, "2x^2+x+1");
    EXPECT_EQ(c.witness->second, "2x^2+x+1");
    EXPECT_EQ(c.witness->s, -c.witness->t);  // (1, -1) up to scaling
    EXPECT_NE(c.witness->s, 0);
    EXPECT_TRUE(divides(pc.q1, c.witness->s * pc.A + c.witness->t * b2));
  }
}

TEST(Certify, TwoCubicsInconclusive) {
  Polynomial p = P("x+1") * P("x^3-2") * P("x^3-3x-1");
  FactorList fl{Rational(1), {{P("x+1"), 1}, {P("x^3-2"), 1}, {P("x^3-3x-1"), 1}}};
  Certificate c = certify(p, P("x^5+3x^2-x+4"), P("2x^4-x^3+7x+1"), fl);
  EXPECT_EQ(c.verdict, Verdict::Inconclusive);
}

TEST(Certify, DegreeFourFactorInconclusive) {
  Polynomial p = P("x+1") * P("x^4+1");
  FactorList fl{Rational(1), {{P("x+1"), 1}, {P("x^4+1"), 1}}};
  Certificate c = certify(p, P("x^3+2"), P("x^2-5x"), fl);
  EXPECT_EQ(c.verdict, Verdict::Inconclusive);
}

TEST(Certify, PreconditionFailures) {
  const auto& pc = paper_constants();
  EXPECT_EQ(precondition_message([&] { certify(pc.P, pc.A, 2 * pc.A, pc.p_factors); })
                .rfind("coprime", 0),
            0u);
  FactorList wrong_unit = pc.p_factors;
  wrong_unit.unit = 2;
  EXPECT_EQ(precondition_message([&] { certify(pc.P, pc.A, pc.B, wrong_unit); })
                .rfind("factorization", 0),
            0u);
  FactorList wrong = pc.p_factors;
  wrong.factors[1].poly = P("2x^2+x+3");
  EXPECT_EQ(
      precondition_message([&] { certify(pc.P, pc.A, pc.B, wrong); }).rfind("factorization", 0),
      0u);
  FactorList repeated{Rational(1), {{P("x^2+1"), 2}}};
  EXPECT_EQ(precondition_message([&] {
              certify(P("x^4+2x^2+1"), pc.A, pc.B, repeated);
            }).rfind("multiplicity", 0),
            0u);
  FactorList reducible{Rational(1), {{P("x^2-1"), 1}}};
  EXPECT_EQ(precondition_message([&] { certify(P("x^2-1"), pc.A, pc.B, reducible); })
                .rfind("irreducibility", 0),
            0u);
}

TEST(Certify, OrderIndependent) {
  const auto& pc = paper_constants();
  Certificate base = certify(pc.P, pc.A, pc.B, pc.p_factors);
  FactorList fl = pc.p_factors;
  std::sort(fl.factors.begin(), fl.factors.end(), [](const Factor& a, const Factor& b) {
    return format_poly(a.poly) < format_poly(b.poly);
  });
  do {
    Certificate c = certify(pc.P, pc.A, pc.B, fl);
    EXPECT_EQ(c.verdict, base.verdict);
    ASSERT_EQ(c.case_table.size(), base.case_table.size());
    for (std::size_t i = 0; i < c.case_table.size(); ++i) {
      EXPECT_EQ(c.case_table[i].first, base.case_table[i].first);
      EXPECT_EQ(c.case_table[i].second, base.case_table[i].second);
      EXPECT_EQ(c.case_table[i].rule, base.case_table[i].rule);
      EXPECT_EQ(c.case_table[i].evidence, base.case_table[i].evidence);
    }
  } while (std::next_permutation(fl.factors.begin(), fl.factors.end(),
                                 [](const Factor& a, const Factor& b) {
                                   return format_poly(a.poly) < format_poly(b.poly);
                                 }));
}

// Randomized soundness: Certified implies phi != 0; a witness divides the
// pencil member and forces phi = 0.
TEST(Certify, SoundnessAgainstPhi) {
  Gen gen(83);
  const std::vector<Polynomial> cubics = {P("x^3-2"), P("x^3-3x-1"), P("x^3+x+1"),
                                          P("x^3-x-1"), P("7x^3-3x^2+21x-5")};
  const std::vector<Polynomial> quadratics = {P("x^2+1"), P("x^2-2"), P("2x^2+x+1"),
                                              P("x^2-2x+2"), P("x^2+x+1"), P("x^2-3")};
  int counts[3] = {0, 0, 0};
  for (int k = 0; k < 120; ++k) {
    std::vector<Polynomial> chosen;
    std::set<std::string> used;
    auto add = [&](const Polynomial& f) {
      if (used.insert(format_poly(monic(f))).second) chosen.push_back(f);
    };
    long linear = gen.integer(0, 2);
    for (long i = 0; i < linear; ++i) add(Polynomial{-gen.rational(4, 2), Rational(1)});
    long quad = gen.integer(0, 2);
    for (long i = 0; i < quad; ++i) add(quadratics[gen.integer(0, 5)]);
    if (gen.integer(0, 1) == 1) add(cubics[gen.integer(0, 4)]);
    Polynomial p(Rational(1));
    FactorList fl{Rational(1), {}};
    for (const auto& f : chosen) {
      p *= f;
      fl.factors.push_back({f, 1});
    }
    if (p.degree() < Degree(2)) continue;
    std::size_t n = static_cast<std::size_t>(gen.integer(2, 4));
    Polynomial a = gen.poly(n, 6);
    Polynomial b = gen.poly_upto(n, 6);
    if (k % 3 == 0) {
      // Plant a pencil member divisible by a factor of degree >= 2, or
      // vanishing at two rational roots.
      Polynomial target = chosen[gen.integer(0, static_cast<long>(chosen.size()) - 1)];
      if (target.degree() == Degree(1) && chosen.size() > 1) target = chosen[0] * chosen[1];
      if (target.degree() <= Degree(n)) {
        b = gen.nonzero_rational(3, 2) * a + target * gen.poly_upto(n - target.degree().value(), 4);
      }
    }
    if (b.is_zero() || !gcd(a, b).is_constant()) continue;
    Certificate c = certify(p, a, b, fl);
    std::size_t m = p.degree().value();
    std::size_t nn = std::max(a.degree().value(), b.degree().value());
    if (c.verdict == Verdict::Certified) {
      ++counts[0];
      EXPECT_TRUE(phi(p, a, b, m, nn).nonzero) << format_poly(p);
    } else if (c.verdict == Verdict::Refuted) {
      ++counts[1];
      ASSERT_TRUE(c.witness.has_value());
      Polynomial member = c.witness->s * a + c.witness->t * b;
      EXPECT_FALSE(member.is_zero());
      Polynomial f1 = parse_poly(c.witness->first), f2 = parse_poly(c.witness->second);
      EXPECT_TRUE(divides(f1, member));
      EXPECT_TRUE(divides(f2, member));
      EXPECT_TRUE(divides(f1, p));
      EXPECT_FALSE(phi(p, a, b, m, nn).nonzero) << format_poly(p);
    } else {
      ++counts[2];
    }
  }
  EXPECT_GT(counts[0], 10);
  EXPECT_GT(counts[1], 5);
}

}  // namespace
}  // namespace pencil
