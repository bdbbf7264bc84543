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

#include "pencil/derive.hpp"

#include <stdexcept>

#include "pencil/error.hpp"
#include "pencil/invariant.hpp"
#include "pencil/resultant.hpp"

namespace pencil {

Triple::Triple(Polynomial f2, Polynomial f3, Polynomial f4)
    : f2_(std::move(f2)), f3_(std::move(f3)), f4_(std::move(f4)) {
  for (int i = 2; i <= 4; ++i) {
    if (f(i).degree() > Degree(static_cast<std::size_t>(i))) {
      throw Error(ErrorCode::DegreeBound, "deg f" + std::to_string(i) + " exceeds " +
                                               std::to_string(i));
    }
  }
}

const Polynomial& Triple::f(int i) const {
  switch (i) {
    case 2: return f2_;
    case 3: return f3_;
    case 4: return f4_;
    default: throw std::out_of_range("triple index must be 2, 3 or 4");
  }
}

bool Triple::has_exact_degrees() const {
  return f2_.degree() == Degree(2) && f3_.degree() == Degree(3) && f4_.degree() == Degree(4);
}

std::vector<std::pair<std::string, const Polynomial*>> DerivedSet::named() const {
  return {{"g23", &g23}, {"g24", &g24}, {"g34", &g34}, {"f6", &f6}, {"P", &P},
          {"Q", &Q},     {"R", &R},     {"A", &A},     {"B", &B}};
}

PencilData::PencilData(Polynomial xi, Polynomial eta, Rational t)
    : xi_(std::move(xi)), eta_(std::move(eta)), t_(std::move(t)) {
  if (t_ == 0) throw Error(ErrorCode::ZeroT, "pencil parameter t must be nonzero");
  if (xi_.degree() > Degree(2)) throw Error(ErrorCode::DegreeBound, "deg xi exceeds 2");
  if (eta_.degree() > Degree(3)) throw Error(ErrorCode::DegreeBound, "deg eta exceeds 3");
}

namespace {

Polynomial gij(const Triple& t, int i, int j) {
  const Polynomial& fi = t.f(i);
  const Polynomial& fj = t.f(j);
  return Rational(i) * fi * derivative(fj) - Rational(j) * fj * derivative(fi);
}

Polynomial c(long v) { return Polynomial(Rational(v)); }

}  // namespace

GijSet derive_gij(const Triple& t) { return {gij(t, 2, 3), gij(t, 2, 4), gij(t, 3, 4)}; }

DerivedSet derive_all(const Triple& t) {
  const Polynomial& f2 = t.f2();
  const Polynomial& f3 = t.f3();
  const Polynomial& f4 = t.f4();
  GijSet g = derive_gij(t);
  DerivedSet d;
  d.g23 = g.g23;
  d.g24 = g.g24;
  d.g34 = g.g34;
  d.f6 = c(4) * f2 * f4 - f3 * f3;
  d.P = g.g24 * g.g24 - g.g23 * g.g34;
  d.Q = c(4) * f3 * f4 * g.g24 + (c(4) * f2 * f4 - c(3) * f3 * f3) * g.g34;
  d.R = f2 * (f3 * f3 * g.g23 - c(4) * f2 * f3 * g.g24 + c(4) * f2 * f2 * g.g34);
  d.A = g.g23 * (g.g23 * f3 - c(2) * g.g24 * f2);
  d.B = g.g24 * g.g34;
  return d;
}

Polynomial identity_8_8_residual(const Triple& t) {
  GijSet g = derive_gij(t);
  return c(2) * t.f2() * g.g34 - c(3) * t.f3() * g.g24 + c(4) * t.f4() * g.g23;
}

bool check_identity_8_8(const Triple& t) { return identity_8_8_residual(t).is_zero(); }

PencilCubics build_gt_ht(const Triple& t, const PencilData& pd) {
  const Polynomial& xi = pd.xi();
  const Polynomial tt(pd.t());
  const Polynomial xi2 = xi * xi;
  PencilCubics out;
  out.g_t = tt * xi2 * xi - t.f2() * xi2 - c(4) * tt * t.f4() * xi +
            c(4) * t.f2() * t.f4() - t.f3() * t.f3();
  out.h_t = c(3) * tt * xi2 - c(2) * t.f2() * xi - c(4) * tt * t.f4();
  return out;
}

bool check_eta_relation(const Triple& t, const PencilData& pd) {
  const Polynomial& xi = pd.xi();
  Polynomial rhs = (t.f2() - Polynomial(pd.t()) * xi) * (c(4) * t.f4() - xi * xi) -
                   t.f3() * t.f3();
  return pd.eta() * pd.eta() == rhs;
}

bool GenericityReport::all_pass() const {
  return coprime_f3_f4.pass && coprime_g23_g24.pass && coprime_g34_g24.pass &&
         phi34_nonzero.pass && f3_separable.pass && f6_separable.pass;
}

std::vector<std::pair<std::string, const GenericityCheck*>> GenericityReport::named() const {
  return {{"coprime_f3_f4", &coprime_f3_f4},   {"coprime_g23_g24", &coprime_g23_g24},
          {"coprime_g34_g24", &coprime_g34_g24}, {"phi34_nonzero", &phi34_nonzero},
          {"f3_separable", &f3_separable},     {"f6_separable", &f6_separable}};
}

namespace {

GenericityCheck coprime(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() && b.is_zero()) return {false, "GcdOfZeros"};
  Polynomial g = gcd(a, b);
  if (g.is_constant()) return {true, {}};
  return {false, "common factor of degree " + std::to_string(g.degree().value())};
}

GenericityCheck separable(const Polynomial& p) {
  if (p.is_constant()) return {false, "DegreeDrop"};
  if (is_separable(p)) return {true, {}};
  return {false, "repeated root"};
}

}  // namespace

GenericityReport genericity_check(const Triple& t) {
  DerivedSet d = derive_all(t);
  GenericityReport r;
  r.exact_degrees = t.has_exact_degrees();
  r.coprime_f3_f4 = coprime(t.f3(), t.f4());
  r.coprime_g23_g24 = coprime(d.g23, d.g24);
  r.coprime_g34_g24 = coprime(d.g34, d.g24);
  r.f3_separable = separable(t.f3());
  r.f6_separable = separable(d.f6);

  if (t.f3().degree() != Degree(3)) {
    r.phi34_nonzero = {false, "DegreeDrop"};
  } else {
    try {
      InvariantResult v = phi(t.f3(), t.f2() * t.f2(), t.f4(), 3, 4);
      r.phi34_nonzero = v.nonzero ? GenericityCheck{true, {}} : GenericityCheck{false, "vanishes"};
    } catch (const Error& e) {
      r.phi34_nonzero = {false, std::string(to_string(e.code()))};
    }
  }
  return r;
}

}  // namespace pencil
