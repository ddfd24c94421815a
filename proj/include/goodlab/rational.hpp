#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace goodlab {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Parses an integer ("-3"), a decimal ("2.75", "-.5") or a fraction ("p/q").
/// Throws ValidationError on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form; integers are written as "p/1".
std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

/// base^exponent for any integer exponent; base must be nonzero if exponent < 0.
Rational pow(const Rational& base, long exponent);

/// 2^exponent as an exact rational (exponent may be negative).
Rational pow2(long exponent);

/// Smallest integer r with 2^r >= value; value must be positive.
long ceil_log2(const Rational& value);

BigInt floor(const Rational& value);
BigInt ceil(const Rational& value);

inline bool is_integer(const Rational& value) {
    return boost::multiprecision::denominator(value) == 1;
}

}  // namespace goodlab
