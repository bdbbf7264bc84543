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

#ifndef PENCIL_RATIONAL_HPP
#define PENCIL_RATIONAL_HPP

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace pencil {

// mpq_class keeps every value canonical (lowest terms, positive
// denominator) after each arithmetic operation, so equality is structural.
using Integer = mpz_class;
using Rational = mpq_class;

// Exact integer power; exponent 0 gives 1 (including 0^0).
Rational pow(const Rational& base, unsigned long exponent);
Integer pow(const Integer& base, unsigned long exponent);

int sign(const Rational& r);

bool is_rational_square(const Rational& r);

// Number of decimal digits of |n|; 0 for n = 0.
std::size_t decimal_digits(const Integer& n);

// Trial division for bases below 10^14, BPSW via GMP above that.
bool is_prime(const Integer& n);

struct PrimePower {
  Integer prime;
  unsigned long exponent = 0;
};

struct FactorizationCheck {
  bool ok = false;
  std::string failure;  // first failing check, empty when ok

  explicit operator bool() const noexcept { return ok; }
};

FactorizationCheck verify_integer_factorization(
    const Integer& n, const std::vector<PrimePower>& factors);

// Parses "int" or "int/uint" (optional leading sign, no whitespace).
// Throws Error(ParseError) with the offending byte offset.
Rational parse_rational(const std::string& text);
Integer parse_integer(const std::string& text);

}  // namespace pencil

#endif  // PENCIL_RATIONAL_HPP
