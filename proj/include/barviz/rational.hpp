#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "barviz/errors.hpp"

namespace barviz {

// Exact arithmetic everywhere: coordinates are rationals, bound computations
// use arbitrary-precision integers. Never bind an arithmetic expression on
// these types to `auto` (expression templates); always name the type.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Floor of the integer square root of a non-negative integer.
inline BigInt isqrt_floor(const BigInt& x) {
    if (x < 0) fail(Errc::Internal, "isqrt of negative value");
    BigInt r = boost::multiprecision::sqrt(x);
    // boost::sqrt on cpp_int is the floor square root already; guard anyway.
    while (r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

// Serialize as "p/q", or just "p" when q == 1. Canonical (reduced, q > 0).
inline std::string to_string(const Rational& r) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

// Parse "p/q" or a plain integer, with optional leading '-'. Anything else
// is a ParseError. Zero denominators are rejected.
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) fail(Errc::ParseError, "empty rational literal");
    std::string::size_type slash = s.find('/');
    auto parse_int = [&](const std::string& part) -> BigInt {
        if (part.empty()) fail(Errc::ParseError, "empty integer in rational literal '" + s + "'");
        std::string::size_type i = 0;
        if (part[0] == '-') {
            if (part.size() == 1) fail(Errc::ParseError, "bare '-' in rational literal '" + s + "'");
            i = 1;
        }
        for (; i < part.size(); ++i) {
            if (part[i] < '0' || part[i] > '9')
                fail(Errc::ParseError, "bad character in rational literal '" + s + "'");
        }
        return BigInt(part);
    };
    if (slash == std::string::npos) return Rational(parse_int(s));
    BigInt num = parse_int(s.substr(0, slash));
    BigInt den = parse_int(s.substr(slash + 1));
    if (den <= 0) fail(Errc::ParseError, "denominator must be positive in '" + s + "'");
    return Rational(num, den);
}

// Exact decimal rendering of r to `places` fractional digits, half-up
// rounding (away from zero on ties), no floating point involved.
inline std::string to_decimal_string(const Rational& r, int places) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    bool neg = num < 0;
    if (neg) num = -num;
    BigInt pow10 = 1;
    for (int i = 0; i < places; ++i) pow10 *= 10;
    // round(num/den * 10^places) half-up = floor((num*10^places*2 + den) / (2*den))
    BigInt scaled = (num * pow10 * 2 + den) / (den * 2);
    BigInt whole = scaled / pow10;
    BigInt frac = scaled % pow10;
    std::string out = whole.str();
    if (places > 0) {
        std::string f = frac.str();
        out += "." + std::string(static_cast<size_t>(places) - f.size(), '0') + f;
    }
    if (neg && scaled != 0) out = "-" + out;
    return out;
}

}  // namespace barviz
