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

#include "pencil/rational.hpp"

#include <cctype>

#include "pencil/error.hpp"

namespace pencil {

Rational pow(const Rational& base, unsigned long exponent) {
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
  Rational out(num, den);
  out.canonicalize();
  return out;
}

Integer pow(const Integer& base, unsigned long exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

int sign(const Rational& r) { return sgn(r); }

bool is_rational_square(const Rational& r) {
  if (sgn(r) < 0) return false;
  return mpz_perfect_square_p(r.get_num_mpz_t()) != 0 &&
         mpz_perfect_square_p(r.get_den_mpz_t()) != 0;
}

std::size_t decimal_digits(const Integer& n) {
  if (n == 0) return 0;
  Integer a = abs(n);
  return a.get_str(10).size();
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  static const Integer kTrialLimit("100000000000000");
  if (n >= kTrialLimit) return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
  unsigned long v = n.get_ui();
  if (v < 4) return true;
  if (v % 2 == 0 || v % 3 == 0) return false;
  for (unsigned long d = 5; d * d <= v; d += 6) {
    if (v % d == 0 || v % (d + 2) == 0) return false;
  }
  return true;
}

FactorizationCheck verify_integer_factorization(
    const Integer& n, const std::vector<PrimePower>& factors) {
  Integer product = 1;
  for (const auto& f : factors) {
    if (f.exponent == 0) {
      return {false, "exponent of " + f.prime.get_str() + " is zero"};
    }
    if (!is_prime(f.prime)) {
      return {false, f.prime.get_str() + " is not prime"};
    }
    product *= pow(f.prime, f.exponent);
  }
  if (product != n) {
    return {false, "product of prime powers differs from n"};
  }
  return {true, {}};
}

namespace {

std::size_t scan_digits(const std::string& text, std::size_t pos) {
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  return pos;
}

}  // namespace

Integer parse_integer(const std::string& text) {
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
  std::size_t end = scan_digits(text, pos);
  if (end == pos) throw Error(ErrorCode::ParseError, "expected digits", pos);
  if (end != text.size()) throw Error(ErrorCode::ParseError, "unexpected character", end);
  std::string digits = text;
  if (!digits.empty() && digits.front() == '+') digits.erase(0, 1);
  return Integer(digits, 10);
}

Rational parse_rational(const std::string& text) {
  std::size_t slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  std::string den_text = text.substr(slash + 1);
  std::size_t end = scan_digits(den_text, 0);
  if (end == 0 || end != den_text.size()) {
    throw Error(ErrorCode::ParseError, "malformed denominator", slash + 1 + end);
  }
  Integer den(den_text, 10);
  if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator", slash + 1);
  Rational out(num, den);
  out.canonicalize();
  return out;
}

}  // namespace pencil
