#ifndef L2LAB_GAUSSIAN_HPP
#define L2LAB_GAUSSIAN_HPP

#include <string>
#include <utility>

#include "rational.hpp"

namespace l2lab {

// Element of Q(i): the exact coefficient field used throughout.
class gaussian_rational {
public:
    gaussian_rational() = default;
    gaussian_rational(rational re) : re_(std::move(re)) {}
    gaussian_rational(rational re, rational im) : re_(std::move(re)), im_(std::move(im)) {}
    gaussian_rational(int n) : re_(n) {}
    gaussian_rational(long n) : re_(n) {}

    static gaussian_rational i() { return gaussian_rational(rational(0), rational(1)); }

    const rational& re() const { return re_; }
    const rational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    gaussian_rational conj() const { return gaussian_rational(re_, -im_); }

    // |z|^2 = re^2 + im^2, a nonnegative rational.
    rational norm2() const { return re_ * re_ + im_ * im_; }

    gaussian_rational operator-() const { return gaussian_rational(-re_, -im_); }

    gaussian_rational& operator+=(const gaussian_rational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    gaussian_rational& operator-=(const gaussian_rational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    gaussian_rational& operator*=(const gaussian_rational& o) {
        if (im_ == 0 && o.im_ == 0) { // the common purely real case
            re_ *= o.re_;
            return *this;
        }
        rational r = re_ * o.re_ - im_ * o.im_;
        rational i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    gaussian_rational& operator/=(const gaussian_rational& o) {
        if (o.is_zero()) throw division_by_zero();
        const rational n2 = o.norm2();
        rational r = (re_ * o.re_ + im_ * o.im_) / n2;
        rational i = (im_ * o.re_ - re_ * o.im_) / n2;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }

    friend gaussian_rational operator+(gaussian_rational a, const gaussian_rational& b) { return a += b; }
    friend gaussian_rational operator-(gaussian_rational a, const gaussian_rational& b) { return a -= b; }
    friend gaussian_rational operator*(gaussian_rational a, const gaussian_rational& b) { return a *= b; }
    friend gaussian_rational operator/(gaussian_rational a, const gaussian_rational& b) { return a /= b; }

    friend bool operator==(const gaussian_rational& a, const gaussian_rational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const gaussian_rational& a, const gaussian_rational& b) { return !(a == b); }

    gaussian_rational inverse() const {
        gaussian_rational one(1);
        one /= *this;
        return one;
    }

private:
    rational re_;
    rational im_;
};

// Renders `a+bi` / `a-bi`, dropping the vanishing part; `0` for zero.
inline std::string format_gaussian(const gaussian_rational& z) {
    if (z.is_zero()) return "0";
    if (z.im() == 0) return format_rational(z.re());
    std::string im_part = format_rational(rational_abs(z.im())) + "i";
    if (z.re() == 0) {
        return (z.im() < 0 ? "-" : "") + im_part;
    }
    return format_rational(z.re()) + (z.im() < 0 ? "-" : "+") + im_part;
}

} // namespace l2lab

#endif
