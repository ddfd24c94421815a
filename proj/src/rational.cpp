#include "goodlab/rational.hpp"

#include <cctype>

#include "goodlab/errors.hpp"

namespace goodlab {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

BigInt parse_signed_integer(std::string_view s, std::string_view whole) {
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) {
        throw ValidationError("invalid number '" + std::string(whole) + "'");
    }
    BigInt value{std::string(s)};
    return negative ? BigInt(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    if (text.empty()) throw ValidationError("empty number");

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        BigInt num = parse_signed_integer(text.substr(0, slash), text);
        std::string_view den_text = text.substr(slash + 1);
        if (!all_digits(den_text)) {
            throw ValidationError("invalid denominator in '" + std::string(text) + "'");
        }
        BigInt den(std::string{den_text});
        if (den == 0) throw ValidationError("zero denominator in '" + std::string(text) + "'");
        return Rational(num, den);
    }

    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view int_part = text.substr(0, dot);
        std::string_view frac_part = text.substr(dot + 1);
        bool negative = false;
        if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) {
            negative = int_part.front() == '-';
            int_part.remove_prefix(1);
        }
        if ((int_part.empty() && frac_part.empty()) ||
            (!int_part.empty() && !all_digits(int_part)) ||
            (!frac_part.empty() && !all_digits(frac_part))) {
            throw ValidationError("invalid decimal '" + std::string(text) + "'");
        }
        BigInt whole = int_part.empty() ? BigInt(0) : BigInt(std::string(int_part));
        BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac_part.size()));
        BigInt frac = frac_part.empty() ? BigInt(0) : BigInt(std::string(frac_part));
        Rational value(BigInt(whole * scale + frac), scale);
        return negative ? Rational(-value) : value;
    }

    return Rational(parse_signed_integer(text, text));
}

std::string to_string(const Rational& value) {
    return boost::multiprecision::numerator(value).str() + "/" +
           boost::multiprecision::denominator(value).str();
}

std::string to_string(const BigInt& value) { return value.str(); }

Rational pow(const Rational& base, long exponent) {
    if (exponent < 0) {
        if (base == 0) throw ValidationError("zero raised to a negative power");
        return Rational(1) / pow(base, -exponent);
    }
    Rational result = 1;
    Rational factor = base;
    auto e = static_cast<unsigned long>(exponent);
    while (e != 0) {
        if (e & 1U) result *= factor;
        e >>= 1U;
        if (e != 0) factor *= factor;
    }
    return result;
}

Rational pow2(long exponent) {
    BigInt magnitude = BigInt(1) << static_cast<unsigned>(exponent < 0 ? -exponent : exponent);
    return exponent < 0 ? Rational(BigInt(1), magnitude) : Rational(magnitude);
}

long ceil_log2(const Rational& value) {
    if (value <= 0) throw ValidationError("ceil_log2 of a nonpositive value");
    // Start from the bit-length estimate and correct by at most a couple of steps.
    const BigInt& num = boost::multiprecision::numerator(value);
    const BigInt& den = boost::multiprecision::denominator(value);
    long r = static_cast<long>(boost::multiprecision::msb(num)) -
             static_cast<long>(boost::multiprecision::msb(den));
    while (pow2(r) < value) ++r;
    while (pow2(r - 1) >= value) --r;
    return r;
}

BigInt floor(const Rational& value) {
    const BigInt& num = boost::multiprecision::numerator(value);
    const BigInt& den = boost::multiprecision::denominator(value);
    BigInt q = num / den;  // truncates toward zero
    if (q * den != num && num < 0) q -= 1;
    return q;
}

BigInt ceil(const Rational& value) {
    BigInt f = floor(value);
    return Rational(f) == value ? f : BigInt(f + 1);
}

}  // namespace goodlab
