#pragma once

// Exact arbitrary-precision integers and rationals used by every series
// computation. Thin aliases over Boost.Multiprecision plus the handful of
// helpers the series code needs.

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace gamma0 {

using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& x)   { return boost::multiprecision::numerator(x); }
inline Integer denominator(const Rational& x) { return boost::multiprecision::denominator(x); }

inline bool is_integer(const Rational& x) { return denominator(x) == 1; }

// Throws unless x is an integer that fits in long long.
inline long long to_long(const Rational& x) {
    if (!is_integer(x))
        throw std::domain_error("to_long: not an integer: " + x.str());
    return numerator(x).convert_to<long long>();
}

inline Rational rational_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    Rational b = e > 0 ? base : Rational(1) / base;
    unsigned long n = static_cast<unsigned long>(e > 0 ? e : -e);
    Rational acc(1);
    while (n) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

inline std::string to_string(const Rational& x) { return x.str(); }

inline double to_double(const Rational& x) { return x.convert_to<double>(); }

} // namespace gamma0
