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

#include "pencil/error.hpp"
#include "pencil/paper_constants.hpp"
#include "pencil/rational.hpp"

namespace pencil {
namespace {

// Transcribed a second time, independently of paper_constants.cpp.
const char* const kN =
    "170180100414489407673826285238621248588184132495664769101548147694597"
    "641645055149834797961367009741001058378563516737825717521245942079"
    "363665365894932768287485782991982952060121491854462396585226867885"
    "300239619184714256923401363159130009392223954249957235784417280000";

std::vector<PrimePower> n_primes() {
  return {{2, 368},  {3, 68},    {5, 4},    {7, 4},    {11, 2},    {13, 30},
          {17, 3},   {29, 2},    {43, 28},  {53, 1},   {137, 1},   {389, 1},
          {577, 1},  {1381, 1},  {1657, 1}, {11173, 1}, {18757, 1}, {121349, 1}};
}

TEST(IsRationalSquare, Examples) {
  EXPECT_FALSE(is_rational_square(Rational(-249264)));
  EXPECT_TRUE(is_rational_square(Rational(4, 9)));
  EXPECT_FALSE(is_rational_square(Rational(28)));
  EXPECT_TRUE(is_rational_square(Rational(0)));
  EXPECT_TRUE(is_rational_square(Rational(81)));
  EXPECT_FALSE(is_rational_square(Rational(4, 3)));
  EXPECT_FALSE(is_rational_square(Rational(2, 9)));
}

TEST(IsRationalSquare, SquaresOfRandomRationals) {
  for (long p = -30; p <= 30; ++p) {
    for (long q = 1; q <= 12; ++q) {
      Rational r(p, q);
      r.canonicalize();
      EXPECT_TRUE(is_rational_square(r * r));
      if (r != 0) {
        EXPECT_FALSE(is_rational_square(-r * r));
      }
    }
  }
}

TEST(IntegerFactorization, SmallExamples) {
  EXPECT_TRUE(verify_integer_factorization(Integer(12), {{2, 2}, {3, 1}}));
  EXPECT_FALSE(verify_integer_factorization(Integer(12), {{2, 1}, {3, 1}}));
  EXPECT_FALSE(verify_integer_factorization(Integer(12), {{4, 1}, {3, 1}}));  // 4 not prime
  EXPECT_TRUE(verify_integer_factorization(Integer(1), {}));
}

TEST(IntegerFactorization, WorkedExampleN) {
  Integer n(kN);
  EXPECT_EQ(decimal_digits(n), 267u);
  EXPECT_TRUE(verify_integer_factorization(n, n_primes()));
  EXPECT_EQ(n, paper_constants().N);
}

TEST(IntegerFactorization, ExponentOf43Perturbed) {
  auto primes = n_primes();
  for (auto& pp : primes) {
    if (pp.prime == 43) pp.exponent = 27;
  }
  auto check = verify_integer_factorization(Integer(kN), primes);
  EXPECT_FALSE(check.ok);
  EXPECT_FALSE(check.failure.empty());
}

TEST(IsPrime, Basics) {
  EXPECT_FALSE(is_prime(Integer(1)));
  EXPECT_TRUE(is_prime(Integer(2)));
  EXPECT_TRUE(is_prime(Integer(121349)));
  EXPECT_FALSE(is_prime(Integer(121347)));
  EXPECT_TRUE(is_prime(Integer("170141183460469231731687303715884105727")));  // 2^127 - 1
}

TEST(DecimalDigits, Basics) {
  EXPECT_EQ(decimal_digits(Integer(0)), 0u);
  EXPECT_EQ(decimal_digits(Integer(9)), 1u);
  EXPECT_EQ(decimal_digits(Integer(10)), 2u);
  EXPECT_EQ(decimal_digits(Integer(-999)), 3u);
  EXPECT_EQ(decimal_digits(pow(Integer(10), 100)), 101u);
  EXPECT_EQ(decimal_digits(pow(Integer(10), 100) - 1), 100u);
}

TEST(ParseRational, Forms) {
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(parse_rational("-3/6"), Rational(-1, 2));
  EXPECT_EQ(parse_rational("7/7"), Rational(1));
  EXPECT_THROW(parse_rational(" 7"), Error);
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("abc"), Error);
  EXPECT_THROW(parse_rational(""), Error);
}

TEST(Pow, Rational) {
  EXPECT_EQ(pow(Rational(-2, 3), 3), Rational(-8, 27));
  EXPECT_EQ(pow(Rational(5), 0), Rational(1));
}

}  // namespace
}  // namespace pencil
