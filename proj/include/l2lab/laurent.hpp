#ifndef L2LAB_LAURENT_HPP
#define L2LAB_LAURENT_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gaussian.hpp"

namespace l2lab {

// Multivariate Laurent polynomial over Q(i). Exponent vectors are raw
// integers; there is no shifting to nonnegative exponents. Terms with zero
// coefficients are never stored, so the zero test is the empty map.
//
// A value whose terms all have zero exponent vectors acts as a constant and
// silently promotes to the variable count of the other operand; arity
// mismatches between genuinely multivariate values are an error.
class laurent_poly {
public:
    using exponents = std::vector<std::int64_t>;
    using term_map = std::map<exponents, gaussian_rational>;

    explicit laurent_poly(int nvars = 0) : nvars_(nvars) {}

    static laurent_poly constant(int nvars, gaussian_rational c) {
        laurent_poly p(nvars);
        if (!c.is_zero()) p.terms_.emplace(exponents(static_cast<std::size_t>(nvars), 0), std::move(c));
        return p;
    }

    static laurent_poly monomial(int nvars, exponents e, gaussian_rational c) {
        laurent_poly p(nvars);
        if (!c.is_zero()) p.terms_.emplace(std::move(e), std::move(c));
        return p;
    }

    static laurent_poly variable(int nvars, int index, std::int64_t power = 1) {
        exponents e(static_cast<std::size_t>(nvars), 0);
        e[static_cast<std::size_t>(index)] = power;
        return monomial(nvars, std::move(e), gaussian_rational(1));
    }

    int vars() const { return nvars_; }
    const term_map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool is_constant() const {
        for (const auto& [e, c] : terms_) {
            for (std::int64_t x : e)
                if (x != 0) return false;
        }
        return true;
    }

    gaussian_rational constant_value() const {
        if (terms_.empty()) return gaussian_rational(0);
        return terms_.begin()->second;
    }

    // Reinterpret a constant over a different variable count.
    laurent_poly promoted(int nvars) const {
        if (!is_constant()) throw error("only constants promote across variable counts");
        return constant(nvars, constant_value());
    }

    laurent_poly operator-() const {
        laurent_poly p(nvars_);
        for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
        return p;
    }

    friend laurent_poly operator+(const laurent_poly& a, const laurent_poly& b) {
        auto [x, y] = align(a, b);
        laurent_poly out(x.nvars_);
        out.terms_ = std::move(x.terms_);
        for (const auto& [e, c] : y.terms_) out.add_term(e, c);
        return out;
    }

    friend laurent_poly operator-(const laurent_poly& a, const laurent_poly& b) {
        auto [x, y] = align(a, b);
        laurent_poly out(x.nvars_);
        out.terms_ = std::move(x.terms_);
        for (const auto& [e, c] : y.terms_) out.add_term(e, -c);
        return out;
    }

    friend laurent_poly operator*(const laurent_poly& a, const laurent_poly& b) {
        auto [x, y] = align(a, b);
        laurent_poly out(x.nvars_);
        exponents e(static_cast<std::size_t>(x.nvars_), 0);
        for (const auto& [ea, ca] : x.terms_) {
            for (const auto& [eb, cb] : y.terms_) {
                for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
                out.add_term(e, ca * cb);
            }
        }
        return out;
    }

    laurent_poly& operator+=(const laurent_poly& o) { return *this = *this + o; }
    laurent_poly& operator-=(const laurent_poly& o) { return *this = *this - o; }
    laurent_poly& operator*=(const laurent_poly& o) { return *this = *this * o; }

    friend laurent_poly operator*(const laurent_poly& a, const gaussian_rational& c) {
        laurent_poly out(a.nvars_);
        if (c.is_zero()) return out;
        for (const auto& [e, x] : a.terms_) out.terms_.emplace(e, x * c);
        return out;
    }
    friend laurent_poly operator*(const gaussian_rational& c, const laurent_poly& a) { return a * c; }

    friend bool operator==(const laurent_poly& a, const laurent_poly& b) {
        if (a.nvars_ == b.nvars_) return a.terms_ == b.terms_;
        auto [x, y] = align(a, b);
        return x.terms_ == y.terms_;
    }
    friend bool operator!=(const laurent_poly& a, const laurent_poly& b) { return !(a == b); }

    laurent_poly pow(std::uint64_t k) const {
        laurent_poly acc = constant(nvars_, gaussian_rational(1));
        laurent_poly base = *this;
        while (k > 0) {
            if (k & 1) acc = acc * base;
            base = base * base;
            k >>= 1;
        }
        return acc;
    }

    // Leading term under lexicographic order on exponent vectors. The order
    // is translation invariant, which is what the exact division below needs.
    const std::pair<const exponents, gaussian_rational>& leading_term() const {
        if (terms_.empty()) throw error("leading term of the zero polynomial");
        return *terms_.rbegin();
    }

    // Exact division: requires d | *this in Q(i)[z1^±,...]. Both operands are
    // shifted by their monomial content into the polynomial ring, where lex
    // is a well-order: the leading term of an exact multiple is always
    // divisible by the divisor's leading term, so a failed exponent
    // comparison detects an inexact division, and the strictly decreasing
    // leading terms guarantee termination.
    laurent_poly divide_exact(const laurent_poly& d) const {
        if (d.is_zero()) throw division_by_zero();
        if (is_zero()) return laurent_poly(nvars_);
        auto [a, dd] = align(*this, d);
        const exponents a_shift = a.min_exponents();
        const exponents d_shift = dd.min_exponents();
        laurent_poly r = a.divided_by_monomial(a_shift);
        const laurent_poly dn = dd.divided_by_monomial(d_shift);
        const auto& dl = dn.leading_term();

        laurent_poly q(r.nvars_);
        while (!r.is_zero()) {
            const auto& rl = r.leading_term();
            exponents e(rl.first.size());
            for (std::size_t k = 0; k < e.size(); ++k) {
                e[k] = rl.first[k] - dl.first[k];
                if (e[k] < 0) throw error("inexact Laurent division");
            }
            laurent_poly qt = monomial(r.nvars_, std::move(e), rl.second / dl.second);
            q += qt;
            r -= qt * dn;
        }
        exponents shift(static_cast<std::size_t>(q.nvars_), 0);
        for (std::size_t k = 0; k < shift.size(); ++k) shift[k] = d_shift[k] - a_shift[k];
        return q.divided_by_monomial(shift);
    }

    // Componentwise minimum exponent over the support (the monomial content).
    exponents min_exponents() const {
        exponents m(static_cast<std::size_t>(nvars_), 0);
        bool first = true;
        for (const auto& [e, c] : terms_) {
            (void)c;
            if (first) {
                m = e;
                first = false;
            } else {
                for (std::size_t k = 0; k < m.size(); ++k) m[k] = std::min(m[k], e[k]);
            }
        }
        return m;
    }

    // Positive rational c with all coefficient components of *this / c coprime
    // integers; content of zero is 0.
    rational content() const {
        rational g(0);
        for (const auto& [e, c] : terms_) {
            (void)e;
            g = rational_gcd(g, c.re());
            g = rational_gcd(g, c.im());
        }
        return g;
    }

    laurent_poly divided_by_monomial(const exponents& m) const {
        laurent_poly out(nvars_);
        for (const auto& [e, c] : terms_) {
            exponents shifted(e);
            for (std::size_t k = 0; k < shifted.size(); ++k) shifted[k] -= m[k];
            out.terms_.emplace(std::move(shifted), c);
        }
        return out;
    }

    // Point evaluation; coordinates under a negative exponent must be nonzero.
    gaussian_rational evaluate(const std::vector<gaussian_rational>& point) const {
        if (static_cast<int>(point.size()) != nvars_) throw error("evaluation point has wrong arity");
        gaussian_rational total(0);
        for (const auto& [e, c] : terms_) {
            gaussian_rational v = c;
            for (std::size_t k = 0; k < e.size(); ++k) {
                v *= pow_scalar(point[k], e[k]);
            }
            total += v;
        }
        return total;
    }

private:
    static gaussian_rational pow_scalar(const gaussian_rational& x, std::int64_t e) {
        gaussian_rational base = x;
        std::uint64_t k;
        if (e < 0) {
            if (x.is_zero()) throw division_by_zero("negative exponent at a zero coordinate");
            base = x.inverse();
            k = static_cast<std::uint64_t>(-e);
        } else {
            k = static_cast<std::uint64_t>(e);
        }
        gaussian_rational acc(1);
        while (k > 0) {
            if (k & 1) acc *= base;
            base *= base;
            k >>= 1;
        }
        return acc;
    }

    static std::pair<laurent_poly, laurent_poly> align(const laurent_poly& a, const laurent_poly& b) {
        if (a.nvars_ == b.nvars_) return {a, b};
        if (a.is_constant()) return {a.promoted(b.nvars_), b};
        if (b.is_constant()) return {a, b.promoted(a.nvars_)};
        throw error("Laurent polynomials over different variable counts");
    }

    void add_term(const exponents& e, const gaussian_rational& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    int nvars_;
    term_map terms_;
};

inline bool poly_is_zero(const laurent_poly& p) { return p.is_zero(); }

} // namespace l2lab

#endif
