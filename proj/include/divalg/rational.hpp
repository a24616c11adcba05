/*
   Copyright 2026 The divalg Authors

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

#ifndef DIVALG_RATIONAL_HPP
#define DIVALG_RATIONAL_HPP

#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "divalg/arith.hpp"

namespace divalg {

/// Exact rational number. GMP keeps mpq_class canonical (gcd 1, den > 0)
/// after every arithmetic operation; values built from a raw pair go
/// through make_rational.
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);

/// Accepts "n" or "n/d" with optional sign; rejects d == 0.
Rational parse_rational(std::string_view text);

/// Always "num/den", also for integers ("2/1").
std::string to_string(const Rational& q);

/// Decimal rendering with the given number of significant digits.
std::string to_decimal(const Rational& q, int significant = 10);

/// max(|num|, den)
Integer height(const Rational& q);

Rational pow(const Rational& q, long exponent);

/// All rationals of height <= bound: by height, then by absolute value,
/// positive before negative (0, 1, -1, 1/2, -1/2, 2, -2, ...).
std::vector<Rational> rationals_up_to_height(unsigned bound);

/// Exact sum of 1/k for k in [lo, hi], by binary splitting.
Rational harmonic_range(long lo, long hi);

}  // namespace divalg

#endif  // DIVALG_RATIONAL_HPP
