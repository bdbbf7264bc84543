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

// Acceptance suite: one PASS/FAIL line per criterion; exit status 0 iff all
// criteria pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "pencil/certifier.hpp"
#include "pencil/derive.hpp"
#include "pencil/error.hpp"
#include "pencil/invariant.hpp"
#include "pencil/paper_constants.hpp"
#include "pencil/pipeline.hpp"
#include "pencil/poly_io.hpp"
#include "pencil/quotient.hpp"
#include "pencil/resultant.hpp"
#include "pencil/sturm.hpp"
#include "test_support.hpp"

namespace {

using namespace pencil;
using pencil::testing::from_roots;
using pencil::testing::Gen;
using Clock = std::chrono::steady_clock;

Polynomial P(const char* s) { return parse_poly(s); }

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Collects failed sub-checks of one criterion.
class Criterion {
 public:
  void check(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  void note(const std::string& s) { notes_.push_back(s); }
  bool ok() const { return failures_.empty(); }
  std::string summary() const {
    std::ostringstream os;
    for (const auto& f : failures_) os << " [failed: " << f << "]";
    for (const auto& n : notes_) os << " (" << n << ")";
    return os.str();
  }

 private:
  std::vector<std::string> failures_, notes_;
};

std::optional<ErrorCode> error_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

void ac1(Criterion& c) {
  const auto& pc = paper_constants();
  double best = 1e9;
  DerivedSet d;
  for (int i = 0; i < 5; ++i) {
    auto start = Clock::now();
    d = derive_all(pc.triple());
    best = std::min(best, ms_since(start));
  }
  c.check(d.P == P("56x^8-52x^7+180x^6-40x^5+40x^4+284x^3+84x^2+128x-40"), "P exact");
  c.check(best < 10.0, "derive_all under 10 ms");
  std::ostringstream os;
  os.precision(3);
  os << std::fixed << best << " ms";
  c.note(os.str());
}

void ac2(Criterion& c) {
  DerivedSet d = derive_all(paper_constants().triple());
  c.check(d.A == P("96x^9-16x^8-160x^7+704x^6-208x^5-512x^4+208x^3+208x^2-128x"), "A exact");
  c.check(d.B == P("40x^9-108x^8+316x^7-198x^6+316x^5+122x^4+180x^3-178x^2-84x-22"),
          "B exact");
}

void ac3(Criterion& c) {
  const auto& pc = paper_constants();
  Polynomial product = Rational(4) * P("x+1") * P("2x^2+x+1") * P("x^2-2x+2") *
                       P("7x^3-3x^2+21x-5");
  c.check(product == pc.P, "product equals P");
  c.check(verify_factorization(pc.P, pc.p_factors), "verify_factorization");
}

void ac4(Criterion& c) {
  const auto& pc = paper_constants();
  Rational s7(1, pow(Integer(7), 7));
  c.check(reduce(pc.A, pc.q1).rep() == Rational(-1, 4) * P("2389x+271"), "A mod q1");
  c.check(reduce(pc.B, pc.q1).rep() == Rational(1, 16) * P("741x+1471"), "B mod q1");
  c.check(reduce(pc.A, pc.q2).rep() == P("-1280x+3616"), "A mod q2");
  c.check(reduce(pc.B, pc.q2).rep() == P("-1648x+870"), "B mod q2");
  c.check(reduce(pc.A, pc.g).rep() == s7 * P("3869324320x^2+9251095616x-2476940000"), "A mod g");
  c.check(reduce(pc.B, pc.g).rep() == s7 * P("818130160x^2-1744372672x+333091504"), "B mod g");
}

void ac5(Criterion& c) {
  const auto& pc = paper_constants();
  Polynomial one(Rational(1));
  GijSet g = derive_gij(pc.triple());
  DerivedSet d = derive_all(pc.triple());
  c.check(gcd(pc.A, pc.B) == one, "gcd(A,B)");
  c.check(gcd(pc.f3, pc.f4) == one, "gcd(f3,f4)");
  c.check(gcd(g.g23, g.g24) == one, "gcd(g23,g24)");
  c.check(gcd(g.g34, g.g24) == one, "gcd(g34,g24)");
  c.check(is_separable(pc.f3), "f3 separable");
  c.check(is_separable(d.f6), "f6 separable");
  c.check(phi(pc.f3, pc.f2 * pc.f2, pc.f4, 3, 4).nonzero, "phi_3,4 nonzero");
  c.check(genericity_check(pc.triple()).all_pass(), "genericity suite");
}

void ac6(Criterion& c) {
  const auto& pc = paper_constants();
  c.check(count_real_roots(pc.P) == 2, "P has 2 real roots");
  c.check(count_real_roots(pc.g) == 1, "g has 1 real root");
}

void ac7(Criterion& c) {
  const auto& pc = paper_constants();
  Certificate cert = certify(pc.P, pc.A, pc.B, pc.p_factors);
  bool all = cert.case_table.size() == 9;
  for (const auto& e : cert.case_table) all = all && e.ruled_out;
  c.check(cert.verdict == Verdict::Certified, "worked example CERTIFIED");
  c.check(all, "9 pair classes ruled out");

  Certificate refuted = certify(pc.P, pc.A, pc.A + pc.q1, pc.p_factors);
  c.check(refuted.verdict == Verdict::Refuted && refuted.witness &&
              refuted.witness->s == -refuted.witness->t,
          "dependent residues REFUTED with (1,-1)");

  FactorList wrong = pc.p_factors;
  wrong.unit = 2;
  c.check(error_of([&] { certify(pc.P, pc.A, pc.B, wrong); }) == ErrorCode::PreconditionFailed,
          "wrong unit is a precondition failure");
  c.check(error_of([&] { certify(pc.P, pc.A, 2 * pc.A, pc.p_factors); }) ==
              ErrorCode::PreconditionFailed,
          "gcd(A,2A) is a precondition failure");

  FactorList two{Rational(1), {{P("x+1"), 1}, {P("x^3-2"), 1}, {P("x^3-3x-1"), 1}}};
  Certificate inc = certify(P("x+1") * P("x^3-2") * P("x^3-3x-1"), P("x^5+3x^2-x+4"),
                            P("2x^4-x^3+7x+1"), two);
  c.check(inc.verdict == Verdict::Inconclusive, "two cubics INCONCLUSIVE");
}

void ac8(Criterion& c) {
  const auto& pc = paper_constants();
  auto start = Clock::now();
  Report report = run_verify_paper();
  double elapsed = ms_since(start);
  c.check(report.pass(), "verify-paper passes");
  c.check(elapsed < 60000.0, "verify-paper under 60 s");
  InvariantResult r = phi(pc.P, pc.A, pc.B, 8, 9);
  c.check(r.nonzero, "phi_8,9(P,A,B) nonzero");
  c.check(verify_integer_factorization(pc.N, pc.n_factorization).ok, "factorization of N");
  c.check(decimal_digits(pc.N) == 267, "N has 267 digits");
  std::ostringstream os;
  os.precision(1);
  os << std::fixed << "verify-paper " << elapsed << " ms; phi has " << r.digit_count
     << " digits";
  c.note(os.str());
}

Rational root_pair_product(const std::vector<Rational>& roots, const Polynomial& g,
                           const Polynomial& h) {
  Rational out(1);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = 0; j < roots.size(); ++j) {
      if (i == j) continue;
      const Rational &a = roots[i], &b = roots[j];
      out *= (g(a) * h(b) - g(b) * h(a)) / (a - b);
    }
  }
  return out;
}

void ac9(Criterion& c) {
  Gen gen(2026);

  int identity_ok = 0;
  for (int k = 0; k < 100; ++k) {
    Triple t(gen.poly_upto(2, 10), gen.poly_upto(3, 10), gen.poly_upto(4, 10));
    if (check_identity_8_8(t)) ++identity_ok;
  }
  c.check(identity_ok == 100, "g_ij identity on 100 triples");

  int planted_ok = 0;
  for (int k = 0; k < 50; ++k) {
    std::size_t m = static_cast<std::size_t>(gen.integer(3, 6));
    std::size_t n = static_cast<std::size_t>(gen.integer(2, 6));
    Polynomial q = gen.irreducible_quadratic();
    Polynomial f;
    for (;;) {
      Polynomial r = gen.poly(m - 2, 6);
      f = q * r;
      if (!divides(q, r) && is_separable(f)) break;
    }
    Polynomial g, h;
    do {
      g = gen.poly_upto(n, 8);
      h = q * gen.poly_upto(n - 2, 8) - g;
    } while (proportional(g, h));
    if (!phi(f, g, h, m, n).nonzero) ++planted_ok;
  }
  c.check(planted_ok == 50, "planted zeros 50/50");

  std::size_t m = 4, n = 3;
  std::vector<Rational> roots = {Rational(-2), Rational(1, 3), Rational(1), Rational(5, 2)};
  Rational lead(3, 2);
  Polynomial f = from_roots(lead, roots);
  std::optional<Rational> ratio;
  int oracle_ok = 0;
  while (oracle_ok < 10) {
    Polynomial g = gen.poly_upto(n, 6), h = gen.poly_upto(n, 6);
    Rational oracle = root_pair_product(roots, g, h);
    if (proportional(g, h) || oracle == 0) continue;
    Rational q = phi(f, g, h, m, n).value / oracle;
    if (!ratio) ratio = q;
    if (q != *ratio || q == 0) break;
    ++oracle_ok;
  }
  c.check(oracle_ok == 10, "root-pair oracle ratio constant on 10 instances");

  int sylvester_ok = 0;
  for (int k = 0; k < 200; ++k) {
    Polynomial a = gen.poly(static_cast<std::size_t>(gen.integer(1, 7)), 20, 4);
    Polynomial b = gen.poly(static_cast<std::size_t>(gen.integer(1, 7)), 20, 4);
    if (sylvester_resultant(a, b, a.degree().value(), b.degree().value()) ==
        subresultant_resultant(a, b)) {
      ++sylvester_ok;
    }
  }
  c.check(sylvester_ok == 200, "Sylvester vs subresultant on 200 pairs");

  int mult_ok = 0;
  for (int k = 0; k < 100; ++k) {
    Polynomial a = gen.poly(static_cast<std::size_t>(gen.integer(1, 4)), 8, 2);
    Polynomial b = gen.poly(static_cast<std::size_t>(gen.integer(0, 4)), 8, 2);
    Polynomial d = gen.poly(static_cast<std::size_t>(gen.integer(0, 4)), 8, 2);
    std::size_t da = a.degree().value(), db = b.degree().value(), dd = d.degree().value();
    if (resultant(a, b * d, da, db + dd) == resultant(a, b, da, db) * resultant(a, d, da, dd)) {
      ++mult_ok;
    }
  }
  c.check(mult_ok == 100, "resultant multiplicativity on 100 triples");
}

void ac10(Criterion& c) {
  const auto& pc = paper_constants();
  std::vector<Rational> roots = {Rational(1), Rational(-1), Rational(1, 2)};
  Polynomial g = pc.f2 * pc.f2;
  Rational product = root_pair_product(roots, g, pc.f4);
  c.check(product == Rational(99 * 99, 32 * 32), "product is (99/32)^2");
  Rational ratio = phi(pc.f3, g, pc.f4, 3, 4).value / product;
  c.check(ratio != 0, "ratio nonzero");
  Gen gen(10);
  int consistent = 0;
  for (int k = 0; k < 10; ++k) {
    Polynomial g2 = g + gen.poly_upto(4, 3);
    Polynomial h2 = pc.f4 + gen.poly_upto(4, 3);
    Rational prod2 = root_pair_product(roots, g2, h2);
    if (proportional(g2, h2) || prod2 == 0) {
      --k;
      continue;
    }
    if (phi(pc.f3, g2, h2, 3, 4).value / prod2 == ratio) ++consistent;
  }
  c.check(consistent == 10, "ratio consistent across 10 perturbed (g,h)");
  c.note("ratio = " + ratio.get_str());
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, void (*)(Criterion&)>> criteria = {
      {"AC1  exact reproduction of P", ac1},
      {"AC2  exact reproduction of A and B", ac2},
      {"AC3  factorization of P", ac3},
      {"AC4  residues mod q1, q2, g", ac4},
      {"AC5  genericity conditions", ac5},
      {"AC6  real-root counts", ac6},
      {"AC7  certificate and fault injection", ac7},
      {"AC8  phi_8,9 nonzero, N, runtime", ac8},
      {"AC9  property suites", ac9},
      {"AC10 worked small-instance oracle", ac10},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Criterion c;
    try {
      fn(c);
    } catch (const std::exception& e) {
      c.check(false, std::string("exception: ") + e.what());
    }
    std::printf("%s  %s%s\n", c.ok() ? "PASS" : "FAIL", name.c_str(), c.summary().c_str());
    if (!c.ok()) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
