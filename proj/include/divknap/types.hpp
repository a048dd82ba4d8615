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

#ifndef DIVKNAP_TYPES_HPP
#define DIVKNAP_TYPES_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace divknap {

// Everything in this library is exact. Int is an arbitrary-precision
// integer, Rat an arbitrary-precision rational kept in lowest terms with a
// positive denominator (the canonical form GMP maintains across
// arithmetic). There is no floating-point fallback anywhere.
using Int = mpz_class;
using Rat = mpq_class;

/// Builds num/den in canonical form. den must be nonzero.
Rat make_rat(const Int& num, const Int& den);

/// Floor of a/b for b > 0.
Int floor_div(const Int& a, const Int& b);

/// Ceiling of a/b for b > 0.
Int ceil_div(const Int& a, const Int& b);

/// True iff d divides x (d > 0).
bool divides(const Int& d, const Int& x);

/// Exact quotient x/d; requires d | x.
Int exact_div(const Int& x, const Int& d);

bool is_integer(const Rat& q);

/// Decimal rendering: "-12". Rationals render as "p/q", or just "p" when
/// the denominator is one, matching the on-disk JSON convention.
std::string to_string(const Int& v);
std::string to_string(const Rat& v);

/// Strict parsers for the same formats; reject empty strings, stray
/// characters, and zero denominators with ErrorCode::ParseError.
Int parse_int(std::string_view text);
Rat parse_rat(std::string_view text);

}  // namespace divknap

#endif  // DIVKNAP_TYPES_HPP
