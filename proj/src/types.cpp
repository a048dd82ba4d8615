// Copyright 2026 The divknap Authors
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

#include "divknap/types.hpp"

#include <cstddef>

#include "divknap/error.hpp"

namespace divknap {

Rat make_rat(const Int& num, const Int& den) {
  require(sgn(den) != 0, ErrorCode::ParseError, "zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int ceil_div(const Int& a, const Int& b) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

bool divides(const Int& d, const Int& x) {
  return mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) != 0;
}

Int exact_div(const Int& x, const Int& d) {
  internal_check(divides(d, x), "exact_div: not divisible");
  Int q;
  mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
  return q;
}

bool is_integer(const Rat& q) { return q.get_den() == 1; }

std::string to_string(const Int& v) { return v.get_str(); }

std::string to_string(const Rat& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_str();
}

namespace {

bool valid_decimal(std::string_view s) {
  std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

}  // namespace

Int parse_int(std::string_view text) {
  require(valid_decimal(text), ErrorCode::ParseError,
          "not a decimal integer: '" + std::string(text) + "'");
  return Int(std::string(text), 10);
}

Rat parse_rat(std::string_view text) {
  const std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(text));
  const Int num = parse_int(text.substr(0, slash));
  const Int den = parse_int(text.substr(slash + 1));
  require(sgn(den) > 0, ErrorCode::ParseError,
          "denominator must be positive: '" + std::string(text) + "'");
  return make_rat(num, den);
}

}  // namespace divknap
