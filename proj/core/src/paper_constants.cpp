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

#include "pencil/paper_constants.hpp"

#include "pencil/poly_io.hpp"

namespace pencil {

namespace {

// Published with line breaks after 69, 66 and 66 digits.
constexpr const char* kN =
    "170180100414489407673826285238621248588184132495664769101548147694597"
    "641645055149834797961367009741001058378563516737825717521245942079"
    "363665365894932768287485782991982952060121491854462396585226867885"
    "300239619184714256923401363159130009392223954249957235784417280000";

PaperConstants build() {
  PaperConstants c;
  c.f2 = parse_poly("2x^2-1");
  c.f3 = parse_poly("2x^3-x^2-2x+1");
  c.f4 = parse_poly("x^4+x^3-2x^2+x+1");
  c.P = parse_poly("56x^8-52x^7+180x^6-40x^5+40x^4+284x^3+84x^2+128x-40");
  c.A = parse_poly("96x^9-16x^8-160x^7+704x^6-208x^5-512x^4+208x^3+208x^2-128x");
  c.B = parse_poly("40x^9-108x^8+316x^7-198x^6+316x^5+122x^4+180x^3-178x^2-84x-22");
  c.ell = parse_poly("x+1");
  c.q1 = parse_poly("2x^2+x+1");
  c.q2 = parse_poly("x^2-2x+2");
  c.g = parse_poly("7x^3-3x^2+21x-5");
  c.p_factors.unit = 4;
  c.p_factors.factors = {{c.ell, 1}, {c.q1, 1}, {c.q2, 1}, {c.g, 1}};

  const Rational seventh = Rational(1) / Rational(pow(Integer(7), 7));
  c.residues = {
      {"q1", Rational(-1, 4) * parse_poly("2389x+271"), Rational(1, 16) * parse_poly("741x+1471")},
      {"q2", parse_poly("-1280x+3616"), parse_poly("-1648x+870")},
      {"g", seventh * parse_poly("3869324320x^2+9251095616x-2476940000"),
       seventh * parse_poly("818130160x^2-1744372672x+333091504")},
  };

  c.N = Integer(kN, 10);
  c.n_factorization = {
      {2, 368},   {3, 68},    {5, 4},     {7, 4},      {11, 2},     {13, 30},
      {17, 3},    {29, 2},    {43, 28},   {53, 1},     {137, 1},    {389, 1},
      {577, 1},   {1381, 1},  {1657, 1},  {11173, 1},  {18757, 1},  {121349, 1},
  };
  return c;
}

}  // namespace

const PaperConstants& paper_constants() {
  static const PaperConstants constants = build();
  return constants;
}

std::string serialize(const PaperConstants& c) {
  std::string out;
  auto line = [&out](const std::string& name, const std::string& value) {
    out += name;
    out += " = ";
    out += value;
    out += '\n';
  };
  line("f2", format_poly(c.f2));
  line("f3", format_poly(c.f3));
  line("f4", format_poly(c.f4));
  line("P", format_poly(c.P));
  line("A", format_poly(c.A));
  line("B", format_poly(c.B));
  line("unit", c.p_factors.unit.get_str());
  for (const auto& f : c.p_factors.factors) {
    line("factor", format_poly(f.poly) + " ^ " + std::to_string(f.multiplicity));
  }
  for (const auto& r : c.residues) {
    line("A mod " + r.modulus_name, format_poly(r.a));
    line("B mod " + r.modulus_name, format_poly(r.b));
  }
  line("N", c.N.get_str());
  for (const auto& pp : c.n_factorization) {
    line("prime", pp.prime.get_str() + " ^ " + std::to_string(pp.exponent));
  }
  return out;
}

std::uint64_t fingerprint(const PaperConstants& c) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : serialize(c)) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace pencil
