#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace cantornet {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer pow2(unsigned n) { return Integer(1) << n; }

/// True iff 0 < y < 1 and the reduced denominator is a power of two.
inline bool is_dyadic_interior(const Rational& y) {
    if (y <= 0 || y >= 1) return false;
    const Integer d = denominator(y);
    return (d & (d - 1)) == 0;
}

/// Parses "p/q" or a bare integer "p". Whitespace is not accepted.
inline Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(text));
        const Integer p(text.substr(0, slash));
        const Integer q(text.substr(slash + 1));
        if (q == 0) throw std::invalid_argument("zero denominator");
        return Rational(p, q);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational: " + text);
    }
}

/// Canonical "p/q" form, q >= 1.
inline std::string format_rational(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace cantornet
