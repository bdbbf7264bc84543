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

#include "pencil/pipeline.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "pencil/error.hpp"
#include "pencil/poly_io.hpp"
#include "pencil/quotient.hpp"
#include "pencil/sturm.hpp"

namespace pencil {

using nlohmann::ordered_json;

bool Report::pass() const {
  if (steps.empty()) return false;
  for (const auto& s : steps) {
    if (!s.pass) return false;
  }
  return true;
}

const StepRecord* Report::find(const std::string& step) const {
  for (const auto& s : steps) {
    if (s.step == step) return &s;
  }
  return nullptr;
}

namespace {

std::string bool_text(bool b) { return b ? "true" : "false"; }

// Empty when equal, else the first differing coefficient from the top.
std::string first_difference(const std::string& name, const Polynomial& computed,
                             const Polynomial& expected) {
  if (computed == expected) return {};
  std::size_t top = std::max(computed.coefficients().size(), expected.coefficients().size());
  for (std::size_t k = top; k-- > 0;) {
    if (computed.coeff(k) != expected.coeff(k)) {
      return name + " differs at x^" + std::to_string(k) + ": computed " +
             computed.coeff(k).get_str() + ", expected " + expected.coeff(k).get_str();
    }
  }
  return name + " differs";
}

std::string factor_list_text(const FactorList& fl) {
  std::string out = fl.unit.get_str();
  for (const auto& f : fl.factors) {
    out += "(" + format_poly(f.poly) + ")";
    if (f.multiplicity != 1) out += "^" + std::to_string(f.multiplicity);
  }
  return out;
}

std::string prime_power_text(const std::vector<PrimePower>& pps) {
  std::string out;
  for (const auto& pp : pps) {
    if (!out.empty()) out += " * ";
    out += pp.prime.get_str();
    if (pp.exponent != 1) out += "^" + std::to_string(pp.exponent);
  }
  return out;
}

// "2^a * 3^b / 5^c" when |r| factors completely over primes below 10^6,
// otherwise the plain fraction.
std::string small_prime_form(const Rational& r) {
  if (r == 0) return "0";
  Integer num = abs(r.get_num());
  Integer den = r.get_den();
  std::vector<PrimePower> up, down;
  // Composite p never divide once their prime factors are removed.
  for (unsigned long p = 2; p < 1000000 && (num > 1 || den > 1); p += (p == 2 ? 1 : 2)) {
    unsigned long e = 0;
    while (mpz_divisible_ui_p(num.get_mpz_t(), p)) {
      num /= p;
      ++e;
    }
    if (e) up.push_back({p, e});
    e = 0;
    while (mpz_divisible_ui_p(den.get_mpz_t(), p)) {
      den /= p;
      ++e;
    }
    if (e) down.push_back({p, e});
  }
  if (num != 1 || den != 1) return r.get_str();
  std::string out = sgn(r) < 0 ? "-" : "";
  out += up.empty() ? "1" : prime_power_text(up);
  if (!down.empty()) out += " / (" + prime_power_text(down) + ")";
  return out;
}

class Runner {
 public:
  void step(const std::string& name, const std::function<void(StepRecord&)>& body) {
    StepRecord rec;
    rec.step = name;
    auto start = std::chrono::steady_clock::now();
    try {
      body(rec);
    } catch (const std::exception& e) {
      rec.pass = false;
      rec.actual = std::string("error: ") + e.what();
    }
    auto stop = std::chrono::steady_clock::now();
    rec.ms = std::chrono::duration<double, std::milli>(stop - start).count();
    report_.steps.push_back(std::move(rec));
  }

  Report take() { return std::move(report_); }

 private:
  Report report_;
};

}  // namespace

Report run_verify_paper(const PaperConstants& c, const VerifyOptions& options) {
  Runner run;
  DerivedSet derived;
  std::optional<InvariantResult> invariant;

  run.step("derive", [&](StepRecord& r) {
    r.expected = "P = " + format_poly(c.P) + "; A = " + format_poly(c.A) +
                 "; B = " + format_poly(c.B);
    derived = derive_all(c.triple());
    std::string diff = first_difference("P", derived.P, c.P);
    if (diff.empty()) diff = first_difference("A", derived.A, c.A);
    if (diff.empty()) diff = first_difference("B", derived.B, c.B);
    r.pass = diff.empty();
    r.actual = r.pass ? "P = " + format_poly(derived.P) + "; A = " + format_poly(derived.A) +
                            "; B = " + format_poly(derived.B)
                      : diff;
  });

  run.step("factorization", [&](StepRecord& r) {
    r.expected = factor_list_text(c.p_factors) + " = " + format_poly(c.P);
    Polynomial product(c.p_factors.unit);
    for (const auto& f : c.p_factors.factors) product *= pow(f.poly, f.multiplicity);
    r.pass = verify_factorization(c.P, c.p_factors);
    r.actual = factor_list_text(c.p_factors) + " = " + format_poly(product);
  });

  run.step("irreducibility", [&](StepRecord& r) {
    std::string exp, act;
    bool all = true;
    for (const auto* f : {&c.ell, &c.q1, &c.q2, &c.g}) {
      const bool irr = irreducible_le3(*f);
      all = all && irr;
      if (!exp.empty()) {
        exp += "; ";
        act += "; ";
      }
      exp += format_poly(*f) + " irreducible";
      act += format_poly(*f) + (irr ? " irreducible" : " reducible");
    }
    r.expected = exp;
    r.actual = act;
    r.pass = all;
  });

  run.step("real-roots", [&](StepRecord& r) {
    r.expected = "P: 2; g: 1";
    const std::size_t np = count_real_roots(c.P);
    const std::size_t ng = count_real_roots(c.g);
    r.actual = "P: " + std::to_string(np) + "; g: " + std::to_string(ng);
    r.pass = np == 2 && ng == 1;
  });

  run.step("residues", [&](StepRecord& r) {
    const std::vector<std::pair<std::string, const Polynomial*>> moduli = {
        {"q1", &c.q1}, {"q2", &c.q2}, {"g", &c.g}};
    bool all = true;
    std::string exp, act;
    for (const auto& res : c.residues) {
      const Polynomial* q = nullptr;
      for (const auto& [name, poly] : moduli) {
        if (name == res.modulus_name) q = poly;
      }
      if (q == nullptr) throw std::runtime_error("unknown modulus " + res.modulus_name);
      Polynomial ra = reduce(c.A, *q).rep();
      Polynomial rb = reduce(c.B, *q).rep();
      all = all && ra == res.a && rb == res.b;
      if (!exp.empty()) {
        exp += "; ";
        act += "; ";
      }
      exp += "A mod " + res.modulus_name + " = " + format_poly(res.a) + ", B mod " +
             res.modulus_name + " = " + format_poly(res.b);
      act += "A mod " + res.modulus_name + " = " + format_poly(ra) + ", B mod " +
             res.modulus_name + " = " + format_poly(rb);
    }
    r.expected = exp;
    r.actual = act;
    r.pass = all && c.residues.size() == 3;
  });

  run.step("coprime-A-B", [&](StepRecord& r) {
    r.expected = "gcd(A, B) = 1";
    Polynomial g = gcd(c.A, c.B);
    r.actual = "gcd(A, B) = " + format_poly(g);
    r.pass = g == Polynomial(Rational(1));
  });

  run.step("genericity", [&](StepRecord& r) {
    GenericityReport gr = genericity_check(c.triple());
    std::string exp, act;
    for (const auto& [name, check] : gr.named()) {
      if (!exp.empty()) {
        exp += ", ";
        act += ", ";
      }
      exp += name + "=true";
      act += name + "=" + bool_text(check->pass);
      if (!check->pass) act += " (" + check->reason + ")";
    }
    r.expected = exp;
    r.actual = act;
    r.pass = gr.all_pass();
  });

  run.step("certify", [&](StepRecord& r) {
    r.expected = "CERTIFIED, 9 pair classes ruled out";
    Certificate cert = certify(c.P, c.A, c.B, c.p_factors);
    std::size_t ruled = 0;
    for (const auto& e : cert.case_table) ruled += e.ruled_out ? 1 : 0;
    r.actual = std::string(to_string(cert.verdict)) + ", " + std::to_string(ruled) + " of " +
               std::to_string(cert.case_table.size()) + " pair classes ruled out";
    r.pass = cert.verdict == Verdict::Certified && cert.case_table.size() == 9 && ruled == 9;
  });

  run.step("invariant", [&](StepRecord& r) {
    const std::size_t m = c.P.degree().value();
    const std::size_t n = std::max(c.A.degree().value(), c.B.degree().value());
    r.expected = "phi(P, A, B, " + std::to_string(m) + ", " + std::to_string(n) + ") != 0";
    invariant = phi(c.P, c.A, c.B, m, n, options.invariant);
    r.actual = invariant->nonzero
                   ? "nonzero, " + std::to_string(invariant->digit_count) + " digits"
                   : "zero";
    r.pass = invariant->nonzero;
  });

  run.step("integer-N", [&](StepRecord& r) {
    r.expected = "267 digits; N = " + prime_power_text(c.n_factorization);
    const std::size_t digits = decimal_digits(c.N);
    FactorizationCheck check = verify_integer_factorization(c.N, c.n_factorization);
    r.actual = std::to_string(digits) + " digits; " +
               (check ? "prime factorization verified" : "factorization fails: " + check.failure);
    r.pass = digits == 267 && check.ok;
  });

  run.step("normalization-ratio", [&](StepRecord& r) {
    r.expected = "informational";
    r.pass = true;
    if (!invariant || !invariant->nonzero || c.N == 0) {
      r.actual = "unavailable";
      return;
    }
    const Rational n(c.N);
    const Rational ratio1 = invariant->value / n;
    const Rational ratio2 = ratio1 / n;
    r.actual = "phi/N = " + small_prime_form(ratio1) + "; phi/N^2 = " + small_prime_form(ratio2);
  });

  return run.take();
}

namespace {

ordered_json poly_json(const Polynomial& p) { return format_poly(p); }

}  // namespace

std::string to_json(const Report& report, bool include_timing) {
  ordered_json steps = ordered_json::array();
  for (const auto& s : report.steps) {
    ordered_json j;
    j["step"] = s.step;
    j["pass"] = s.pass;
    j["expected"] = s.expected;
    j["actual"] = s.actual;
    if (include_timing) {
      j["ms"] = std::round(s.ms * 1000.0) / 1000.0;
    } else {
      j["ms"] = 0;
    }
    steps.push_back(std::move(j));
  }
  ordered_json out;
  out["command"] = "verify-paper";
  out["pass"] = report.pass();
  out["steps"] = std::move(steps);
  return out.dump(2) + "\n";
}

std::string to_json(const Certificate& cert) {
  ordered_json pre;
  pre["factorization"] = cert.preconditions.factorization;
  pre["irreducible_factors"] = cert.preconditions.irreducible_factors;
  pre["squarefree_factors"] = cert.preconditions.squarefree_factors;
  pre["coprime_ab"] = cert.preconditions.coprime_ab;
  pre["p_separable"] = cert.preconditions.p_separable;
  pre["degree_bounds"] = cert.preconditions.degree_bounds;
  pre["m"] = cert.preconditions.m;
  pre["n"] = cert.preconditions.n;

  ordered_json table = ordered_json::array();
  for (const auto& e : cert.case_table) {
    ordered_json row;
    row["pair"] = {e.first, e.second};
    row["rule"] = e.rule;
    row["ruled_out"] = e.ruled_out;
    ordered_json ev = ordered_json::object();
    for (const auto& [k, v] : e.evidence) ev[k] = v;
    row["evidence"] = std::move(ev);
    table.push_back(std::move(row));
  }

  ordered_json out;
  out["verdict"] = std::string(to_string(cert.verdict));
  out["preconditions"] = std::move(pre);
  out["case_table"] = std::move(table);
  if (cert.witness) {
    out["witness"] = {{"s", cert.witness->s.get_str()},
                      {"t", cert.witness->t.get_str()},
                      {"pair", {cert.witness->first, cert.witness->second}}};
  } else {
    out["witness"] = nullptr;
  }
  out["notes"] = cert.notes;
  return out.dump(2) + "\n";
}

std::string to_json(const DerivedSet& derived) {
  ordered_json out;
  for (const auto& [name, p] : derived.named()) out[name] = poly_json(*p);
  return out.dump(2) + "\n";
}

std::string to_json(const GenericityReport& report) {
  ordered_json checks;
  for (const auto& [name, check] : report.named()) {
    checks[name] = {{"pass", check->pass}, {"reason", check->reason}};
  }
  ordered_json out;
  out["all_pass"] = report.all_pass();
  out["exact_degrees"] = report.exact_degrees;
  out["checks"] = std::move(checks);
  return out.dump(2) + "\n";
}

std::string to_json(const InvariantResult& result) {
  ordered_json out;
  out["m"] = result.m;
  out["n"] = result.n;
  out["nonzero"] = result.nonzero;
  out["digit_count"] = result.digit_count;
  out["value"] = result.value.get_str();
  return out.dump(2) + "\n";
}

std::string to_text(const Report& report) {
  std::ostringstream os;
  std::size_t index = 1;
  for (const auto& s : report.steps) {
    os << std::setw(2) << index++ << "  " << std::left << std::setw(22) << s.step << std::right
       << (s.pass ? "PASS" : "FAIL") << "  " << std::fixed << std::setprecision(1)
       << std::setw(9) << s.ms << " ms\n";
    os << "      expected: " << s.expected << "\n";
    os << "      actual:   " << s.actual << "\n";
  }
  os << "overall: " << (report.pass() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::string to_text(const Certificate& cert) {
  std::ostringstream os;
  os << "verdict: " << to_string(cert.verdict) << "\n";
  for (const auto& e : cert.case_table) {
    os << "  (" << e.first << ", " << e.second << ")  " << e.rule << "  "
       << (e.ruled_out ? "ruled out" : "NOT ruled out");
    for (const auto& [k, v] : e.evidence) os << "  " << k << "=" << v;
    os << "\n";
  }
  if (cert.witness) {
    os << "witness: s = " << cert.witness->s.get_str() << ", t = " << cert.witness->t.get_str()
       << " at (" << cert.witness->first << ", " << cert.witness->second << ")\n";
  }
  for (const auto& n : cert.notes) os << "note: " << n << "\n";
  return os.str();
}

}  // namespace pencil
