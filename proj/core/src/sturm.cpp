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

#include "pencil/sturm.hpp"

#include "pencil/error.hpp"

namespace pencil {

namespace {

std::size_t count_variations(const std::vector<int>& signs) {
  std::size_t changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

SturmChain sturm_chain(const Polynomial& p) {
  if (p.is_constant()) {
    throw Error(ErrorCode::DegreeOutOfRange, "Sturm chain of a constant");
  }
  if (!gcd(p, derivative(p)).is_constant()) {
    throw Error(ErrorCode::NotSquarefree, "polynomial has a repeated factor");
  }
  SturmChain s;
  s.chain.push_back(p);
  s.chain.push_back(derivative(p));
  while (!s.chain.back().is_constant()) {
    const auto n = s.chain.size();
    s.chain.push_back(-rem(s.chain[n - 2], s.chain[n - 1]));
  }
  return s;
}

std::size_t sign_variations_at(const SturmChain& s, const Rational& x) {
  std::vector<int> signs;
  signs.reserve(s.chain.size());
  for (const auto& p : s.chain) signs.push_back(sgn(p(x)));
  return count_variations(signs);
}

std::size_t sign_variations_at_minus_infinity(const SturmChain& s) {
  std::vector<int> signs;
  for (const auto& p : s.chain) {
    int lead = sgn(p.leading());
    signs.push_back(p.degree().value() % 2 == 0 ? lead : -lead);
  }
  return count_variations(signs);
}

std::size_t sign_variations_at_plus_infinity(const SturmChain& s) {
  std::vector<int> signs;
  for (const auto& p : s.chain) signs.push_back(sgn(p.leading()));
  return count_variations(signs);
}

std::size_t count_real_roots(const Polynomial& p) {
  SturmChain s = sturm_chain(p);
  return sign_variations_at_minus_infinity(s) - sign_variations_at_plus_infinity(s);
}

std::size_t count_real_roots_in(const Polynomial& p, const Rational& lo, const Rational& hi) {
  SturmChain s = sturm_chain(p);
  std::size_t a = sign_variations_at(s, lo);
  std::size_t b = sign_variations_at(s, hi);
  return a >= b ? a - b : 0;
}

}  // namespace pencil
