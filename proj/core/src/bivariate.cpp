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

#include "pencil/bivariate.hpp"

#include <stdexcept>

#include "pencil/error.hpp"

namespace pencil {

BivarPoly::BivarPoly(std::size_t deg_x, std::size_t deg_y)
    : deg_x_(deg_x),
      deg_y_(deg_y),
      grid_(deg_x + 1, std::vector<Rational>(deg_y + 1, Rational(0))) {}

Polynomial BivarPoly::y_coefficient(std::size_t j) const {
  std::vector<Rational> c(deg_x_ + 1);
  for (std::size_t i = 0; i <= deg_x_; ++i) c[i] = grid_[i][j];
  return Polynomial(std::move(c));
}

Polynomial BivarPoly::specialize_x(const Rational& x) const {
  std::vector<Rational> c(deg_y_ + 1, Rational(0));
  Rational xp = 1;
  for (std::size_t i = 0; i <= deg_x_; ++i) {
    for (std::size_t j = 0; j <= deg_y_; ++j) {
      if (grid_[i][j] != 0) c[j] += grid_[i][j] * xp;
    }
    xp *= x;
  }
  return Polynomial(std::move(c));
}

Rational BivarPoly::operator()(const Rational& x, const Rational& y) const {
  return specialize_x(x)(y);
}

bool BivarPoly::is_zero() const {
  for (const auto& row : grid_) {
    for (const auto& c : row) {
      if (c != 0) return false;
    }
  }
  return true;
}

bool BivarPoly::is_symmetric() const {
  if (deg_x_ != deg_y_) return false;
  for (std::size_t i = 0; i <= deg_x_; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (grid_[i][j] != grid_[j][i]) return false;
    }
  }
  return true;
}

BivarPoly BivarPoly::operator-() const {
  BivarPoly out = *this;
  out *= Rational(-1);
  return out;
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& rhs) {
  if (rhs.deg_x_ != deg_x_ || rhs.deg_y_ != deg_y_) {
    throw std::invalid_argument("BivarPoly: formal degrees differ");
  }
  for (std::size_t i = 0; i <= deg_x_; ++i) {
    for (std::size_t j = 0; j <= deg_y_; ++j) grid_[i][j] += rhs.grid_[i][j];
  }
  return *this;
}

BivarPoly& BivarPoly::operator*=(const Rational& s) {
  for (auto& row : grid_) {
    for (auto& c : row) c *= s;
  }
  return *this;
}

BivarPoly difference_quotient(const Polynomial& f) {
  if (f.is_constant()) return BivarPoly(0, 0);
  const std::size_t m = f.degree().value();
  BivarPoly out(m - 1, m - 1);
  // (y^k - x^k) / (y - x) = sum_{i + j = k - 1} x^i y^j
  for (std::size_t k = 1; k <= m; ++k) {
    const Rational& c = f.coefficients()[k];
    if (c == 0) continue;
    for (std::size_t i = 0; i < k; ++i) out.coeff(i, k - 1 - i) += c;
  }
  return out;
}

BivarPoly bezout_D(const Polynomial& g, const Polynomial& h, std::size_t n) {
  if (n == 0) throw Error(ErrorCode::DegreeBound, "pencil degree bound must be >= 1");
  if (g.degree() > Degree(n) || h.degree() > Degree(n)) {
    throw Error(ErrorCode::DegreeBound,
                "pencil members exceed degree bound " + std::to_string(n));
  }
  BivarPoly out(n - 1, n - 1);
  // For a > b: (x^a y^b - x^b y^a) / (x - y) = sum_{k<a-b} x^(b+k) y^(a-1-k)
  for (std::size_t a = 1; a <= n; ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      Rational c = g.coeff(a) * h.coeff(b) - g.coeff(b) * h.coeff(a);
      if (c == 0) continue;
      for (std::size_t k = 0; k < a - b; ++k) out.coeff(b + k, a - 1 - k) += c;
    }
  }
  return out;
}

}  // namespace pencil
