#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace chev {

/// Arbitrary precision rational, always kept in lowest terms with a positive
/// denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p" or "p/q" (optional leading sign, no spaces).
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

/// True iff gcd(num, den) = 1 and den > 0.
bool is_canonical(const Rational& q);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);

/// q^e for any integer e (q must be nonzero when e < 0).
Rational pow(const Rational& q, long e);

}  // namespace chev
