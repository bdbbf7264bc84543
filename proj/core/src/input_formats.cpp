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

#include "pencil/input_formats.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "pencil/error.hpp"
#include "pencil/poly_io.hpp"

namespace pencil {

namespace {

struct Entry {
  std::string key;
  std::string_view value;
  std::size_t key_offset = 0;
  std::size_t value_offset = 0;
};

bool is_blank(std::string_view s) {
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string trimmed(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<Entry> split_entries(std::string_view text) {
  std::vector<Entry> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    std::size_t first = 0;
    while (first < line.size() && std::isspace(static_cast<unsigned char>(line[first]))) ++first;
    if (!is_blank(line) && line[first] != '#') {
      std::size_t eq = line.find('=');
      if (eq == std::string_view::npos) {
        throw Error(ErrorCode::ParseError, "expected 'name = value'", start + first);
      }
      out.push_back({trimmed(line.substr(0, eq)), line.substr(eq + 1), start + first,
                     start + eq + 1});
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

// Re-raises parse errors with the position shifted into file coordinates.
template <class F>
auto at_offset(std::size_t offset, F&& parse) {
  try {
    return parse();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ParseError && e.code() != ErrorCode::BadVariable) throw;
    throw Error(e.code(), e.detail(), offset + e.position().value_or(0));
  }
}

Polynomial poly_at(std::string_view value, std::size_t offset) {
  return at_offset(offset, [&] { return parse_poly(value); });
}

Rational rational_at(std::string_view value, std::size_t offset) {
  std::size_t lead = 0;
  while (lead < value.size() && std::isspace(static_cast<unsigned char>(value[lead]))) ++lead;
  return at_offset(offset + lead, [&] { return parse_rational(trimmed(value)); });
}

}  // namespace

Triple parse_triple_text(std::string_view text) {
  std::map<std::string, Polynomial> polys;
  for (const auto& e : split_entries(text)) {
    if (e.key != "f2" && e.key != "f3" && e.key != "f4") {
      throw Error(ErrorCode::ParseError, "unknown name '" + e.key + "', expected f2, f3 or f4",
                  e.key_offset);
    }
    if (polys.count(e.key)) {
      throw Error(ErrorCode::ParseError, "duplicate entry for " + e.key, e.key_offset);
    }
    polys.emplace(e.key, poly_at(e.value, e.value_offset));
  }
  for (const char* name : {"f2", "f3", "f4"}) {
    if (!polys.count(name)) {
      throw Error(ErrorCode::ParseError, std::string("missing entry for ") + name, text.size());
    }
  }
  return Triple(polys["f2"], polys["f3"], polys["f4"]);
}

FactorList parse_factor_text(std::string_view text) {
  FactorList fl;
  bool have_unit = false;
  for (const auto& e : split_entries(text)) {
    if (e.key == "unit") {
      if (have_unit) throw Error(ErrorCode::ParseError, "duplicate unit", e.key_offset);
      if (!fl.factors.empty()) {
        throw Error(ErrorCode::ParseError, "unit must precede the factors", e.key_offset);
      }
      fl.unit = rational_at(e.value, e.value_offset);
      if (fl.unit == 0) throw Error(ErrorCode::ParseError, "unit must be nonzero", e.value_offset);
      have_unit = true;
    } else if (e.key == "factor") {
      if (!have_unit) throw Error(ErrorCode::ParseError, "missing unit line", e.key_offset);
      std::size_t caret = e.value.rfind('^');
      if (caret == std::string_view::npos) {
        throw Error(ErrorCode::ParseError, "expected '<poly> ^ <multiplicity>'", e.value_offset);
      }
      Polynomial p = poly_at(e.value.substr(0, caret), e.value_offset);
      Integer mult = at_offset(e.value_offset + caret + 1, [&] {
        return parse_integer(trimmed(e.value.substr(caret + 1)));
      });
      if (mult < 1 || !mult.fits_uint_p()) {
        throw Error(ErrorCode::ParseError, "multiplicity must be a positive integer",
                    e.value_offset + caret + 1);
      }
      fl.factors.push_back({p, static_cast<unsigned>(mult.get_ui())});
    } else {
      throw Error(ErrorCode::ParseError, "unknown name '" + e.key + "', expected unit or factor",
                  e.key_offset);
    }
  }
  if (!have_unit) throw Error(ErrorCode::ParseError, "missing unit line", text.size());
  return fl;
}

Polynomial parse_poly_text(std::string_view text) { return parse_poly(text); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace pencil
