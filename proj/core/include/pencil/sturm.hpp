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

#ifndef PENCIL_STURM_HPP
#define PENCIL_STURM_HPP

#include <cstddef>
#include <vector>

#include "pencil/polynomial.hpp"

namespace pencil {

// Canonical Sturm sequence p, p', -rem(p, p'), ... down to a nonzero
// constant. Only built for squarefree p of degree >= 1.
struct SturmChain {
  std::vector<Polynomial> chain;
};

// Throws Error(NotSquarefree) when gcd(p, p') is not constant and
// Error(DegreeOutOfRange) for constants.
SturmChain sturm_chain(const Polynomial& p);

std::size_t sign_variations_at(const SturmChain& s, const Rational& x);
std::size_t sign_variations_at_minus_infinity(const SturmChain& s);
std::size_t sign_variations_at_plus_infinity(const SturmChain& s);

// Distinct real roots of a squarefree polynomial.
std::size_t count_real_roots(const Polynomial& p);

// Distinct real roots in the half-open interval (lo, hi].
std::size_t count_real_roots_in(const Polynomial& p, const Rational& lo, const Rational& hi);

}  // namespace pencil

#endif  // PENCIL_STURM_HPP
