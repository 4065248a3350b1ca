/*
   Copyright 2026 The ddgk Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef DDGK_RATIONAL_HPP
#define DDGK_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace ddgk {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p", "p/q" (whitespace-free). Throws ParseError.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

/// Dense univariate polynomials over Q, constant term first, trailing zeros
/// trimmed. Only what the number-field code needs.
namespace qpoly {

using Poly = std::vector<Rational>;

void trim(Poly& p);
bool is_zero(const Poly& p);
/// -1 for the zero polynomial.
int degree(const Poly& p);

Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly scale(const Poly& a, const Rational& c);

/// a = q*b + r with deg r < deg b; b must be nonzero.
void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);

}  // namespace qpoly

}  // namespace ddgk

#endif
