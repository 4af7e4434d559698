#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace lsa {

/// Arbitrary-precision rational. GMP keeps it canonical: den > 0,
/// gcd(|num|, den) = 1, zero is 0/1.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer& num, const Integer& den);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

/// Accepts "p", "-p", "p/q". Throws InputError on malformed text or q = 0.
Rational parse_rational(std::string_view text);

/// Exact square root if q is the square of a rational.
std::optional<Rational> exact_sqrt(const Rational& q);

double to_double(const Rational& q);

inline int sign(const Rational& q) { return sgn(q); }

}  // namespace lsa
