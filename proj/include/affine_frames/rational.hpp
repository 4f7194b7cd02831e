#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace affine_frames {

// Arbitrary precision rational; gmpxx keeps arithmetic results canonical
// (lowest terms, positive denominator, zero as 0/1).
using Rational = mpq_class;

/// num/den in lowest terms; den must be nonzero.
Rational make_rational(long num, long den = 1);

/// Parses "p/q" or an integer. Anything else (decimals, exponents,
/// whitespace, zero denominator) throws ParseError.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

bool is_canonical(const Rational& r);

}  // namespace affine_frames
