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

#ifndef PENCIL_PAPER_CONSTANTS_HPP
#define PENCIL_PAPER_CONSTANTS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "pencil/certifier.hpp"
#include "pencil/derive.hpp"
#include "pencil/polynomial.hpp"
#include "pencil/rational.hpp"

namespace pencil {

struct ExpectedResidue {
  std::string modulus_name;  // "q1", "q2" or "g"
  Polynomial a;              // A mod modulus
  Polynomial b;              // B mod modulus
};

// The worked example: the triple, its derived P, A, B, the factorization of
// P, the residues of A and B modulo the non-linear factors of P, and the
// published value N with its prime factorization. Fields are plain data so
// tests can perturb them.
struct PaperConstants {
  Polynomial f2, f3, f4;
  Polynomial P, A, B;
  Polynomial ell, q1, q2, g;  // the factors of P
  FactorList p_factors;       // unit 4
  std::vector<ExpectedResidue> residues;
  Integer N;
  std::vector<PrimePower> n_factorization;

  Triple triple() const { return Triple(f2, f3, f4); }
};

const PaperConstants& paper_constants();

// Canonical text form of every constant, one "name = value" per line.
std::string serialize(const PaperConstants& c);

// 64-bit FNV-1a of serialize(c).
std::uint64_t fingerprint(const PaperConstants& c);

}  // namespace pencil

#endif  // PENCIL_PAPER_CONSTANTS_HPP
