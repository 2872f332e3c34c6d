#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace dunkl {

// Arbitrary-precision rational, always canonical (lowest terms, positive
// denominator) as long as it is only touched through mpq_class arithmetic.
using Rational = mpq_class;
using Integer = mpz_class;
using RationalVector = std::vector<Rational>;

// Parses "n", "n/d" or "-n/d". Throws InvalidInput on malformed text or a
// zero denominator.
Rational parse_rational(std::string_view text);

// Always "num/den", with den == 1 spelled out: "3/1", "-1/2", "0/1".
std::string to_string(const Rational& q);

// Comma separated list of rationals, e.g. "1,1/2,0".
RationalVector parse_rational_list(std::string_view text);

bool is_integer(const Rational& q);

// num/den in lowest terms (mpq_class's two-argument constructor does not
// canonicalize).
Rational make_rational(long num, long den);

Rational pow(const Rational& base, unsigned exponent);
Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

}  // namespace dunkl
