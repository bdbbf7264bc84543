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

// Integer-coefficient polynomial kernels shared by the gcd and resultant
// code. Coefficient vectors are little-endian and trimmed (no trailing
// zeros); the empty vector is the zero polynomial.

#ifndef PENCIL_SRC_INT_POLY_HPP
#define PENCIL_SRC_INT_POLY_HPP

#include <cstddef>
#include <vector>

#include "pencil/rational.hpp"

namespace pencil::detail {

using IntPoly = std::vector<Integer>;

inline void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline std::ptrdiff_t degree(const IntPoly& p) {
  return static_cast<std::ptrdiff_t>(p.size()) - 1;
}

Integer content(const IntPoly& p);
IntPoly primitive_part(const IntPoly& p);

// lc(b)^(deg a - deg b + 1) * a = q*b + r. Requires b nonzero and
// deg a >= deg b.
IntPoly pseudo_remainder(IntPoly a, const IntPoly& b);

// Exact division of every coefficient.
void divide_exact(IntPoly& p, const Integer& d);

}  // namespace pencil::detail

#endif  // PENCIL_SRC_INT_POLY_HPP
