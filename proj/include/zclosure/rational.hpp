// Copyright 2026 The zclosure Authors
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

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace zc {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Integer& a) { return sgn(a) == 0; }
inline bool is_zero(const Rational& a) { return sgn(a) == 0; }
inline bool is_one(const Rational& a) { return a == 1; }
inline Rational inverse(const Rational& a) { return Rational(1) / a; }

/// Exact textual form: "p" or "p/q".
std::string to_string(const Integer& a);
std::string to_string(const Rational& a);

/// Parses "p", "-p", "p/q" (q > 0 after normalization). Throws ParseError on
/// malformed text and on a zero denominator.
Rational parse_rational(std::string_view text);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

/// Common denominator of a list of rationals (1 for an empty list).
Integer common_denominator(const std::vector<Rational>& v);

/// Integer power with exact result.
Integer pow(const Integer& base, unsigned long exp);
Rational pow(const Rational& base, long exp);

}  // namespace zc
