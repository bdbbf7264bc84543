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

#ifndef PENCIL_MATRIX_HPP
#define PENCIL_MATRIX_HPP

#include <cstddef>
#include <utility>
#include <vector>

namespace pencil {

template <class T>
using Matrix = std::vector<std::vector<T>>;

// Fraction-free Gaussian elimination (Bareiss). Every intermediate division
// is exact in an integral domain, so T may be an integer or a polynomial
// type. `exact_div(a, b)` must return a / b for b dividing a; `is_zero`
// tests for the zero element. Row swaps track the sign.
template <class T, class ExactDiv, class IsZero>
T bareiss_determinant(Matrix<T> m, ExactDiv exact_div, IsZero is_zero) {
  const std::size_t n = m.size();
  if (n == 0) return T(1);
  bool negate = false;
  T previous(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m[k][k])) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && is_zero(m[swap_row][k])) ++swap_row;
      if (swap_row == n) return T(0);
      std::swap(m[k], m[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = exact_div(v, previous);
      }
    }
    previous = m[k][k];
  }
  T det = m[n - 1][n - 1];
  return negate ? T(-det) : det;
}

}  // namespace pencil

#endif  // PENCIL_MATRIX_HPP
