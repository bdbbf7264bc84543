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

#include "pencil/invariant.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>
#include <vector>

#include "pencil/error.hpp"
#include "pencil/matrix.hpp"
#include "pencil/quotient.hpp"
#include "pencil/resultant.hpp"

namespace pencil {

namespace {

Polynomial inner_by_interpolation(const BivarPoly& f1, const BivarPoly& d, std::size_t m,
                                  std::size_t n, unsigned threads) {
  const std::size_t points = inner_formal_degree(m, n) + 1;
  std::vector<Rational> xs(points);
  std::vector<Rational> ys(points);
  for (std::size_t k = 0; k < points; ++k) xs[k] = Rational(static_cast<unsigned long>(k));

  auto evaluate_range = [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      ys[k] = resultant(f1.specialize_x(xs[k]), d.specialize_x(xs[k]), m - 1, n - 1);
    }
  };

  const std::size_t workers = std::clamp<std::size_t>(threads, 1, points);
  if (workers == 1) {
    evaluate_range(0, points);
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (points + workers - 1) / workers;
    for (std::size_t begin = 0; begin < points; begin += chunk) {
      pool.emplace_back(evaluate_range, begin, std::min(points, begin + chunk));
    }
  }
  return interpolate(xs, ys);
}

Polynomial inner_by_bareiss(const BivarPoly& f1, const BivarPoly& d, std::size_t m,
                            std::size_t n) {
  const std::size_t fa = m - 1;
  const std::size_t fb = n - 1;
  const std::size_t size = fa + fb;
  Matrix<Polynomial> sylvester(size, std::vector<Polynomial>(size));
  // Column c holds y^(size-1-c).
  for (std::size_t row = 0; row < fb; ++row) {
    for (std::size_t k = 0; k <= fa; ++k) sylvester[row][row + fa - k] = f1.y_coefficient(k);
  }
  for (std::size_t row = 0; row < fa; ++row) {
    for (std::size_t k = 0; k <= fb; ++k) {
      sylvester[fb + row][row + fb - k] = d.y_coefficient(k);
    }
  }
  return bareiss_determinant(
      std::move(sylvester),
      [](const Polynomial& a, const Polynomial& b) {
        DivRem qr = divrem(a, b);
        if (!qr.remainder.is_zero()) throw std::logic_error("Bareiss division was not exact");
        return qr.quotient;
      },
      [](const Polynomial& p) { return p.is_zero(); });
}

}  // namespace

std::size_t inner_formal_degree(std::size_t m, std::size_t n) {
  return 2 * (m - 1) * (n - 1);
}

Polynomial inner_resultant(const Polynomial& f, const Polynomial& g, const Polynomial& h,
                           std::size_t m, std::size_t n, const InvariantOptions& options) {
  if (m < 2) throw Error(ErrorCode::DegreeBound, "m must be >= 2");
  if (f.degree() != Degree(m)) {
    throw Error(ErrorCode::DegreeMismatch, "deg f must equal m = " + std::to_string(m));
  }
  BivarPoly f1 = difference_quotient(f);
  BivarPoly d = bezout_D(g, h, n);
  Polynomial r = options.method == InnerResultantMethod::Interpolation
                     ? inner_by_interpolation(f1, d, m, n, options.threads)
                     : inner_by_bareiss(f1, d, m, n);
  if (r.degree() > Degree(inner_formal_degree(m, n))) {
    throw std::logic_error("inner resultant exceeds its formal degree");
  }
  return r;
}

InvariantResult phi(const Polynomial& f, const Polynomial& g, const Polynomial& h,
                    std::size_t m, std::size_t n, const InvariantOptions& options) {
  if (f.degree() != Degree(m)) {
    throw Error(ErrorCode::DegreeMismatch, "deg f must equal m = " + std::to_string(m));
  }
  if (m < 2) throw Error(ErrorCode::DegreeBound, "m must be >= 2");
  if (n < 1) throw Error(ErrorCode::DegreeBound, "n must be >= 1");
  if (g.degree() > Degree(n) || h.degree() > Degree(n)) {
    throw Error(ErrorCode::DegreeBound, "deg g, deg h must be <= n = " + std::to_string(n));
  }
  if (!is_separable(f)) throw Error(ErrorCode::NotSeparable, "f has a repeated root");
  if (proportional(g, h)) {
    throw Error(ErrorCode::DependentPencil, "g and h are linearly dependent");
  }

  Polynomial r = inner_resultant(f, g, h, m, n, options);
  InvariantResult out;
  out.m = m;
  out.n = n;
  out.value = r.is_zero() ? Rational(0) : resultant(f, r, m, inner_formal_degree(m, n));
  out.nonzero = out.value != 0;
  out.digit_count = decimal_digits(out.value.get_num());
  return out;
}

Polynomial wronskian(const Polynomial& g, const Polynomial& h) {
  return derivative(g) * h - g * derivative(h);
}

std::optional<PencilWitness> pencil_witness_check(const Polynomial& f, const Polynomial& g,
                                                  const Polynomial& h, const Polynomial& q) {
  if (q.degree() < Degree(2)) throw Error(ErrorCode::BadModulus, "modulus must have degree >= 2");
  if (!divides(q, f)) throw Error(ErrorCode::NotAFactor, "q does not divide f");
  return residue_relation(g, h, q);
}

}  // namespace pencil
