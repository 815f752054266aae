#ifndef L2LAB_RATIONAL_FUNCTION_HPP
#define L2LAB_RATIONAL_FUNCTION_HPP

#include <utility>

#include "laurent.hpp"

namespace l2lab {

// Quotient of Laurent polynomials. Fractions are not reduced to lowest terms;
// equality is decided by cross-multiplication, which makes every predicate
// here exact without multivariate gcds. reduce_content() is an optional size
// control pass dividing out the denominator's monomial and rational content.
class rational_function {
public:
    rational_function() : num_(0), den_(laurent_poly::constant(0, gaussian_rational(1))) {}

    rational_function(laurent_poly num)
        : num_(std::move(num)), den_(laurent_poly::constant(num_.vars(), gaussian_rational(1))) {}

    rational_function(laurent_poly num, laurent_poly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw division_by_zero("zero denominator in rational function");
    }

    rational_function(int n) : rational_function(laurent_poly::constant(0, gaussian_rational(n))) {}

    const laurent_poly& num() const { return num_; }
    const laurent_poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }

    rational_function operator-() const { return rational_function(-num_, den_); }

    friend rational_function operator+(const rational_function& a, const rational_function& b) {
        return rational_function(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend rational_function operator-(const rational_function& a, const rational_function& b) {
        return rational_function(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend rational_function operator*(const rational_function& a, const rational_function& b) {
        return rational_function(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend rational_function operator/(const rational_function& a, const rational_function& b) {
        if (b.is_zero()) throw division_by_zero();
        return rational_function(a.num_ * b.den_, a.den_ * b.num_);
    }

    rational_function& operator+=(const rational_function& o) { return *this = *this + o; }
    rational_function& operator-=(const rational_function& o) { return *this = *this - o; }
    rational_function& operator*=(const rational_function& o) { return *this = *this * o; }
    rational_function& operator/=(const rational_function& o) { return *this = *this / o; }

    rational_function inverse() const {
        if (is_zero()) throw division_by_zero("inverse of the zero rational function");
        return rational_function(den_, num_);
    }

    friend bool operator==(const rational_function& a, const rational_function& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const rational_function& a, const rational_function& b) { return !(a == b); }

    // Divide numerator and denominator by the denominator's monomial content
    // and rational content (the same factor on both sides, so the value is
    // unchanged). Afterwards the denominator has content 1 and a leading
    // coefficient whose first nonzero component is positive.
    rational_function reduce_content() const {
        if (num_.is_zero()) {
            return rational_function(laurent_poly(den_.vars()),
                                     laurent_poly::constant(den_.vars(), gaussian_rational(1)));
        }
        laurent_poly n = num_;
        laurent_poly d = den_;
        if (n.vars() != d.vars()) {
            const int v = std::max(n.vars(), d.vars());
            n = n.is_constant() && n.vars() != v ? n.promoted(v) : n;
            d = d.is_constant() && d.vars() != v ? d.promoted(v) : d;
        }
        const auto shift = d.min_exponents();
        n = n.divided_by_monomial(shift);
        d = d.divided_by_monomial(shift);
        rational c = d.content();
        const gaussian_rational& lead = d.leading_term().second;
        const bool flip = lead.re() != 0 ? lead.re() < 0 : lead.im() < 0;
        if (flip) c = -c;
        const gaussian_rational inv_c = gaussian_rational(rational(1) / c);
        return rational_function(n * inv_c, d * inv_c);
    }

    gaussian_rational evaluate(const std::vector<gaussian_rational>& point) const {
        const gaussian_rational d = den_.evaluate(point);
        if (d.is_zero()) throw division_by_zero("denominator vanishes at the evaluation point");
        return num_.evaluate(point) / d;
    }

private:
    laurent_poly num_;
    laurent_poly den_;
};

} // namespace l2lab

#endif
