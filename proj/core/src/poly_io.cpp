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

#include "pencil/poly_io.hpp"

#include <cctype>
#include <map>
#include <ostream>

#include "pencil/error.hpp"

namespace pencil {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Polynomial parse() {
    std::map<std::size_t, Rational> terms;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    for (;;) {
      parse_term(negative, terms);
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if (c != '+' && c != '-') unexpected();
      negative = c == '-';
      ++pos_;
    }
    std::vector<Rational> coeffs(terms.empty() ? 0 : terms.rbegin()->first + 1, Rational(0));
    for (const auto& [power, c] : terms) coeffs[power] += c;
    return Polynomial(std::move(coeffs));
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError, what, pos_);
  }

  [[noreturn]] void unexpected() const {
    if (std::isalpha(static_cast<unsigned char>(peek()))) {
      throw Error(ErrorCode::BadVariable,
                  std::string("unknown variable '") + peek() + "', expected 'x'", pos_);
    }
    fail(std::string("unexpected character '") + peek() + "'");
  }

  bool next_is_digit() {
    skip_ws();
    return !at_end() && std::isdigit(static_cast<unsigned char>(peek()));
  }

  Integer parse_uint() {
    skip_ws();
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return Integer(std::string(text_.substr(start, pos_ - start)), 10);
  }

  void parse_term(bool negative, std::map<std::size_t, Rational>& terms) {
    Rational c = 1;
    bool have_coeff = false;
    if (next_is_digit()) {
      Integer num = parse_uint();
      Integer den = 1;
      skip_ws();
      if (!at_end() && peek() == '/') {
        ++pos_;
        den = parse_uint();
        if (den == 0) fail("zero denominator");
      }
      c = Rational(num, den);
      c.canonicalize();
      have_coeff = true;
    }
    skip_ws();
    std::size_t power = 0;
    bool have_var = false;
    if (!at_end() && have_coeff && peek() == '*') {
      ++pos_;
      skip_ws();
      if (at_end() || peek() != 'x') {
        if (!at_end() && std::isalpha(static_cast<unsigned char>(peek()))) unexpected();
        fail("expected 'x' after '*'");
      }
    }
    if (!at_end() && peek() == 'x') {
      ++pos_;
      have_var = true;
      power = 1;
      skip_ws();
      if (!at_end() && peek() == '^') {
        ++pos_;
        Integer e = parse_uint();
        if (!e.fits_ulong_p() || e > 1000000) fail("exponent too large");
        power = e.get_ui();
      }
    } else if (!at_end() && std::isalpha(static_cast<unsigned char>(peek()))) {
      unexpected();
    }
    if (!have_coeff && !have_var) {
      if (at_end()) fail("expected a term");
      unexpected();
    }
    if (negative) c = -c;
    terms[power] += c;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(std::string_view text) { return Parser(text).parse(); }

std::string format_poly(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) {
    const Rational& a = c[k];
    if (a == 0) continue;
    bool negative = sgn(a) < 0;
    Rational mag = abs(a);
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? '-' : '+';
    }
    if (k == 0 || mag != 1) out += mag.get_str();
    if (k >= 1) out += 'x';
    if (k >= 2) out += '^' + std::to_string(k);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << format_poly(p); }

}  // namespace pencil
