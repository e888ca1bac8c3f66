#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qseries {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Parses "P/Q" or "P" into a canonical rational. Decimals are rejected.
Rational parse_rational(std::string_view text);

/// "P/Q", or "P" when the denominator is 1.
std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

}  // namespace qseries
