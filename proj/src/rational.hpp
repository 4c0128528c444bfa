#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace monopath {

/* Exact arithmetic only. Every Rational in the system is canonical:
   lowest terms, denominator > 0, zero is 0/1. mpq_class arithmetic
   preserves canonical form; raw (num,den) construction does not, so
   all construction goes through rat()/parse_rational(). */
using Rational = mpq_class;
using Integer = mpz_class;

Rational rat(long num, long den = 1);
Rational rat(const Integer& num, const Integer& den);

/* Strict grammar: '-'? digits ('/' digits)?, denominator nonzero.
   Anything else (floats, whitespace, signs on the denominator) is rejected. */
std::optional<Rational> parse_rational(const std::string& s);

/* "p" when the denominator is 1, else "p/q"; sign lives on the numerator. */
std::string rational_str(const Rational& r);

inline int sign_of(const Rational& r) { return sgn(r); }

Integer floor_int(const Rational& r);
Integer ceil_int(const Rational& r);

/* Power of two as a rational, exponent may be negative. */
Rational pow2(int e);

} // namespace monopath
