// Copyright 2026 The Auction Authors.
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

namespace auction {

/// Exact rational number. GMP keeps every arithmetic result in lowest terms
/// with a positive denominator.
using Rational = mpq_class;

/// Parses "p/q", an integer, or a decimal literal with optional exponent
/// ("0.9", "-1.25e-2") into an exact rational. Throws AuctionError
/// (MalformedInput) on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// Decimal rendering with the given number of significant digits.
std::string to_decimal(const Rational& value, int significant_digits = 12);

double to_double(const Rational& value);

/// Sign of a rational: -1, 0 or 1.
inline int sign(const Rational& value) { return sgn(value); }

/// num/den in lowest terms; den must be nonzero.
inline Rational fraction(long num, long den) {
  Rational value(num, den);
  value.canonicalize();
  return value;
}

}  // namespace auction
