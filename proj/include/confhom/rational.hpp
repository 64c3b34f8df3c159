#ifndef CONFHOM_RATIONAL_HPP
#define CONFHOM_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace confhom {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "num/den" (den > 0 after normalization) or a bare integer string.
inline Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Int(text));
        }
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den == 0) {
            throw std::invalid_argument("zero denominator");
        }
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational '" + text + "'");
    }
}

// Canonical "num/den" form; cpp_rational keeps gcd-reduced values with den > 0.
inline std::string format_rational(const Rational& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace confhom

#endif
