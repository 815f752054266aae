#ifndef L2LAB_RATIONAL_HPP
#define L2LAB_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "errors.hpp"

namespace l2lab {

// Exact arbitrary-precision scalars. cpp_rational keeps the canonical form
// we rely on everywhere: coprime numerator/denominator, denominator > 0,
// zero represented as 0/1.
using big_int = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

inline big_int numerator(const rational& r) { return boost::multiprecision::numerator(r); }
inline big_int denominator(const rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const rational& r) { return denominator(r) == 1; }

// Renders `p/q`, integers without the `/1`.
inline std::string format_rational(const rational& r) {
    if (is_integer(r)) {
        return numerator(r).str();
    }
    return numerator(r).str() + "/" + denominator(r).str();
}

inline rational rational_abs(const rational& r) { return r < 0 ? rational(-r) : r; }

// gcd of nonnegative rationals: gcd of numerators over lcm of denominators.
// Used for content extraction; gcd(0, x) = x.
inline rational rational_gcd(const rational& a, const rational& b) {
    using boost::multiprecision::gcd;
    using boost::multiprecision::lcm;
    if (a == 0) return rational_abs(b);
    if (b == 0) return rational_abs(a);
    const big_int n = gcd(numerator(rational_abs(a)), numerator(rational_abs(b)));
    const big_int d = lcm(denominator(a), denominator(b));
    return rational(n, d);
}

} // namespace l2lab

#endif
