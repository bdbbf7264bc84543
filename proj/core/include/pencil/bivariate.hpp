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

#ifndef PENCIL_BIVARIATE_HPP
#define PENCIL_BIVARIATE_HPP

#include <cstddef>
#include <vector>

#include "pencil/polynomial.hpp"

namespace pencil {

// Dense polynomial in x and y with fixed formal degrees. Entry (i, j) is
// the coefficient of x^i y^j.
class BivarPoly {
 public:
  BivarPoly(std::size_t deg_x, std::size_t deg_y);

  std::size_t deg_x() const noexcept { return deg_x_; }
  std::size_t deg_y() const noexcept { return deg_y_; }

  const Rational& coeff(std::size_t i, std::size_t j) const { return grid_[i][j]; }
  Rational& coeff(std::size_t i, std::size_t j) { return grid_[i][j]; }

  // Coefficient of y^j as a polynomial in x.
  Polynomial y_coefficient(std::size_t j) const;
  // The polynomial in y obtained by fixing x.
  Polynomial specialize_x(const Rational& x) const;
  Rational operator()(const Rational& x, const Rational& y) const;

  bool is_zero() const;
  bool is_symmetric() const;

  BivarPoly operator-() const;
  BivarPoly& operator+=(const BivarPoly& rhs);
  BivarPoly& operator*=(const Rational& s);
  friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
  friend BivarPoly operator*(const Rational& s, BivarPoly a) { return a *= s; }

  friend bool operator==(const BivarPoly&, const BivarPoly&) = default;

 private:
  std::size_t deg_x_;
  std::size_t deg_y_;
  std::vector<std::vector<Rational>> grid_;
};

// (f(y) - f(x)) / (y - x), formal degree deg(f) - 1 in each variable.
// For a constant f this is the zero polynomial of formal degree 0.
BivarPoly difference_quotient(const Polynomial& f);

// D(x, y) = (g(x) h(y) - g(y) h(x)) / (x - y), formal degree n - 1 in each
// variable. Throws Error(DegreeBound) if n < 1 or deg g, deg h > n.
BivarPoly bezout_D(const Polynomial& g, const Polynomial& h, std::size_t n);

}  // namespace pencil

#endif  // PENCIL_BIVARIATE_HPP
