#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace roots {

// All scalar arithmetic in this library is exact. There is no floating-point
// fallback anywhere; every value is a rational with arbitrary-precision
// numerator and positive denominator, kept in lowest terms.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using Vec = std::vector<Rational>;

inline Rational make_rational(const Int& num, const Int& den) {
    if (den == 0)
        throw std::domain_error("rational: zero denominator");
    if (den < 0)
        return Rational(-num, -den);
    return Rational(num, den);
}

// Canonical text form: "p/q" with q > 1, plain "p" for integers.
inline std::string to_string(const Rational& r) { return r.str(); }

// Accepts "p", "p/q" and non-canonical forms like "2/4" or "1/-2",
// which are normalized, never rejected.
Rational parse_rational(const std::string& text);

bool is_integer(const Rational& r);

// Exact floor/sign helpers used by the integrality checks.
inline int sign(const Rational& r) { return r < 0 ? -1 : (r > 0 ? 1 : 0); }

}  // namespace roots
