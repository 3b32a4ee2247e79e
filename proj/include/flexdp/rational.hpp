#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>

namespace flexdp {

/// Arbitrary precision rational. GMP keeps every result in lowest terms with a
/// positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q" or "p" (optional leading '-'). Throws InputError.
Rational parse_rational(std::string_view text);

/// Always renders as "p/q", including integers ("3/1") and zero ("0/1").
std::string to_string(const Rational & value);

Integer lcm_of_denominators(std::span<const Rational> values);

} // namespace flexdp
