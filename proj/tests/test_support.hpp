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

// Deterministic random generators shared by the property suites.

#ifndef PENCIL_TESTS_TEST_SUPPORT_HPP
#define PENCIL_TESTS_TEST_SUPPORT_HPP

#include <algorithm>
#include <cstddef>
#include <random>
#include <set>
#include <vector>

#include "pencil/polynomial.hpp"

namespace pencil::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  Rational rational(long range = 10, long max_den = 4) {
    Rational r(integer(-range, range), integer(1, max_den));
    r.canonicalize();
    return r;
  }

  Rational nonzero_rational(long range = 10, long max_den = 4) {
    for (;;) {
      Rational r = rational(range, max_den);
      if (r != 0) return r;
    }
  }

  // Degree exactly `degree` (nonzero leading coefficient).
  Polynomial poly(std::size_t degree, long range = 10, long max_den = 1) {
    std::vector<Rational> c(degree + 1);
    for (auto& v : c) v = rational(range, max_den);
    c.back() = nonzero_rational(range, max_den);
    return Polynomial(std::move(c));
  }

  // Degree at most `degree`; may be zero.
  Polynomial poly_upto(std::size_t degree, long range = 10, long max_den = 1) {
    std::vector<Rational> c(degree + 1);
    for (auto& v : c) v = rational(range, max_den);
    return Polynomial(std::move(c));
  }

  // `count` distinct rationals with small numerators and denominators.
  std::vector<Rational> distinct_rationals(std::size_t count, long range = 6, long max_den = 3) {
    std::set<Rational> seen;
    std::vector<Rational> out;
    while (out.size() < count) {
      Rational r = rational(range, max_den);
      if (seen.insert(r).second) out.push_back(r);
    }
    return out;
  }

  // Monic-times-c irreducible quadratic: c*(x^2 + b x + k) with negative
  // discriminant.
  Polynomial irreducible_quadratic() {
    for (;;) {
      Rational b(integer(-4, 4));
      Rational k(integer(1, 9));
      if (b * b - 4 * k < 0) return Polynomial{k, b, Rational(1)} * Rational(integer(1, 3));
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline Polynomial from_roots(const Rational& lead, const std::vector<Rational>& roots) {
  Polynomial p(lead);
  for (const auto& r : roots) p *= Polynomial{-r, Rational(1)};
  return p;
}

}  // namespace pencil::testing

#endif  // PENCIL_TESTS_TEST_SUPPORT_HPP
