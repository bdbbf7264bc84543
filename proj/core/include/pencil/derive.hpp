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

#ifndef PENCIL_DERIVE_HPP
#define PENCIL_DERIVE_HPP

#include <string>
#include <utility>
#include <vector>

#include "pencil/polynomial.hpp"

namespace pencil {

// (f2, f3, f4) with deg f_i <= i. Degree drops are allowed.
class Triple {
 public:
  // Throws Error(DegreeBound) if some deg f_i exceeds i.
  Triple(Polynomial f2, Polynomial f3, Polynomial f4);

  const Polynomial& f2() const noexcept { return f2_; }
  const Polynomial& f3() const noexcept { return f3_; }
  const Polynomial& f4() const noexcept { return f4_; }

  // f_i for i in {2, 3, 4}.
  const Polynomial& f(int i) const;

  bool has_exact_degrees() const;

 private:
  Polynomial f2_, f3_, f4_;
};

struct GijSet {
  Polynomial g23, g24, g34;
};

struct DerivedSet {
  Polynomial g23, g24, g34;
  Polynomial f6;  // 4 f2 f4 - f3^2
  Polynomial P;   // g24^2 - g23 g34
  Polynomial Q;   // 4 f3 f4 g24 + (4 f2 f4 - 3 f3^2) g34
  Polynomial R;   // f2 (f3^2 g23 - 4 f2 f3 g24 + 4 f2^2 g34)
  Polynomial A;   // g23 (g23 f3 - 2 g24 f2)
  Polynomial B;   // g24 g34

  // Named view in a fixed order: g23 g24 g34 f6 P Q R A B.
  std::vector<std::pair<std::string, const Polynomial*>> named() const;
};

// Pencil parameters xi (deg <= 2), eta (deg <= 3) and t != 0.
class PencilData {
 public:
  // Throws Error(ZeroT) for t = 0 and Error(DegreeBound) when xi or eta
  // exceed their degree bounds.
  PencilData(Polynomial xi, Polynomial eta, Rational t);

  const Polynomial& xi() const noexcept { return xi_; }
  const Polynomial& eta() const noexcept { return eta_; }
  const Rational& t() const noexcept { return t_; }

 private:
  Polynomial xi_, eta_;
  Rational t_;
};

// g_ij = i f_i f_j' - j f_j f_i'.
GijSet derive_gij(const Triple& t);
DerivedSet derive_all(const Triple& t);

// 2 f2 g34 - 3 f3 g24 + 4 f4 g23 is the zero polynomial.
Polynomial identity_8_8_residual(const Triple& t);
bool check_identity_8_8(const Triple& t);

struct PencilCubics {
  Polynomial g_t;  // t xi^3 - f2 xi^2 - 4 t f4 xi + 4 f2 f4 - f3^2
  Polynomial h_t;  // 3 t xi^2 - 2 f2 xi - 4 t f4
};

// Substitutes xi(x) into the two pencil polynomials.
PencilCubics build_gt_ht(const Triple& t, const PencilData& pd);

// eta^2 == (f2 - t xi)(4 f4 - xi^2) - f3^2.
bool check_eta_relation(const Triple& t, const PencilData& pd);

struct GenericityCheck {
  bool pass = false;
  std::string reason;  // empty on pass
};

struct GenericityReport {
  GenericityCheck coprime_f3_f4;
  GenericityCheck coprime_g23_g24;
  GenericityCheck coprime_g34_g24;
  GenericityCheck phi34_nonzero;
  GenericityCheck f3_separable;
  GenericityCheck f6_separable;
  // Informational, not part of all_pass().
  bool exact_degrees = false;

  bool all_pass() const;
  std::vector<std::pair<std::string, const GenericityCheck*>> named() const;
};

GenericityReport genericity_check(const Triple& t);

}  // namespace pencil

#endif  // PENCIL_DERIVE_HPP
