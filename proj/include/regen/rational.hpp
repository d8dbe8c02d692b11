#ifndef REGEN_RATIONAL_HPP
#define REGEN_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace regen {

// All bound math runs on exact rationals; floating point shows up only in
// optional decimal output columns.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational ratio(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("ratio: zero denominator");
    return Rational(num) / Rational(den);
}

inline Int num(const Rational& x) { return boost::multiprecision::numerator(x); }
inline Int den(const Rational& x) { return boost::multiprecision::denominator(x); }

/// Canonical "p/q" rendering; integers render without the "/1".
inline std::string to_fraction_string(const Rational& x) {
    if (den(x) == 1) return num(x).str();
    return num(x).str() + "/" + den(x).str();
}

inline Rational parse_fraction(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("parse_fraction: empty string");
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(Int(std::string(s)));
    Int n{std::string(s.substr(0, slash))};
    Int d{std::string(s.substr(slash + 1))};
    return ratio(n, d);
}

/// Fixed-point decimal rendering, correctly rounded to nearest
/// (ties away from zero).
inline std::string to_decimal_string(const Rational& x, int digits = 12) {
    if (digits < 0) throw std::invalid_argument("to_decimal_string: negative digits");
    Int n = num(x), d = den(x);
    const bool neg = n < 0;
    if (neg) n = -n;
    Int pow10 = 1;
    for (int i = 0; i < digits; ++i) pow10 *= 10;
    const Int scaled = (2 * n * pow10 + d) / (2 * d);
    std::string out = neg && scaled != 0 ? "-" : "";
    out += Int(scaled / pow10).str();
    if (digits > 0) {
        std::string frac = Int(scaled % pow10).str();
        out += "." + std::string(static_cast<size_t>(digits) - frac.size(), '0') + frac;
    }
    return out;
}

}  // namespace regen

#endif
