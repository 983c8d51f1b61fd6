#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace deckpoly {

// Exact rational scalar. mpq_class keeps values in lowest terms with a
// positive denominator as long as every construction goes through
// make_rational or parse_rational.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long numerator, long denominator = 1);

// Accepts "p" or "p/q" with optional leading '-'. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

// Integers print as "p", everything else as "p/q".
std::string to_string(const Rational& value);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

}  // namespace deckpoly
