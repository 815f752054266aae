#ifndef L2LAB_GROUP_RING_HPP
#define L2LAB_GROUP_RING_HPP

#include <map>
#include <string>
#include <utility>

#include "gaussian.hpp"
#include "groups.hpp"
#include "laurent.hpp"
#include "matrix.hpp"
#include "rational.hpp"

namespace l2lab {

// Finite formal sum of group elements with Q(i) coefficients, multiplied by
// convolution. A default-constructed value is the zero of any group ring and
// adopts a concrete group on first contact.
template <class G>
class group_ring_element {
public:
    using group_type = G;
    using element = typename G::element;
    using term_map = std::map<element, gaussian_rational, typename G::element_less>;

    group_ring_element() = default;
    explicit group_ring_element(const G& g) : grp_(&g) {}

    static group_ring_element scalar(const G& g, gaussian_rational c) {
        group_ring_element out(g);
        if (!c.is_zero()) out.terms_.emplace(g.identity(), std::move(c));
        return out;
    }

    static group_ring_element one(const G& g) { return scalar(g, gaussian_rational(1)); }

    static group_ring_element of(const G& g, element e, gaussian_rational c = gaussian_rational(1)) {
        group_ring_element out(g);
        if (!c.is_zero()) out.terms_.emplace(std::move(e), std::move(c));
        return out;
    }

    const G* group() const { return grp_; }
    const term_map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t support_size() const { return terms_.size(); }

    gaussian_rational coefficient(const element& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? gaussian_rational(0) : it->second;
    }

    // Coefficient of the group identity.
    gaussian_rational trace() const {
        if (!grp_) return gaussian_rational(0);
        return coefficient(grp_->identity());
    }

    // Star involution: g -> g^-1 with conjugated coefficients.
    group_ring_element star() const {
        group_ring_element out;
        out.grp_ = grp_;
        for (const auto& [e, c] : terms_) out.terms_.emplace(grp_->inverse(e), c.conj());
        return out;
    }

    group_ring_element operator-() const {
        group_ring_element out;
        out.grp_ = grp_;
        for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
        return out;
    }

    friend group_ring_element operator+(const group_ring_element& a, const group_ring_element& b) {
        const G* g = common_group(a, b);
        group_ring_element out;
        out.grp_ = g;
        out.terms_ = a.terms_;
        for (const auto& [e, c] : b.terms_) out.add_term(e, c);
        return out;
    }

    friend group_ring_element operator-(const group_ring_element& a, const group_ring_element& b) {
        return a + (-b);
    }

    friend group_ring_element operator*(const group_ring_element& a, const group_ring_element& b) {
        const G* g = common_group(a, b);
        group_ring_element out;
        out.grp_ = g;
        if (!g) return out;
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                out.add_term(g->multiply(ea, eb), ca * cb);
            }
        }
        return out;
    }

    friend group_ring_element operator*(const group_ring_element& a, const gaussian_rational& c) {
        group_ring_element out;
        out.grp_ = a.grp_;
        if (c.is_zero()) return out;
        for (const auto& [e, x] : a.terms_) out.terms_.emplace(e, x * c);
        return out;
    }
    friend group_ring_element operator*(const gaussian_rational& c, const group_ring_element& a) {
        return a * c;
    }

    group_ring_element& operator+=(const group_ring_element& o) { return *this = *this + o; }
    group_ring_element& operator-=(const group_ring_element& o) { return *this = *this - o; }
    group_ring_element& operator*=(const group_ring_element& o) { return *this = *this * o; }

    friend bool operator==(const group_ring_element& a, const group_ring_element& b) {
        if (a.terms_.empty() && b.terms_.empty()) return true;
        common_group(a, b);
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const group_ring_element& a, const group_ring_element& b) {
        return !(a == b);
    }

    // k-th power; negative k only for a single-term support, whose inverse is
    // c^-1 g^-1.
    group_ring_element pow(long long k) const {
        if (k < 0) {
            if (terms_.size() != 1)
                throw error("negative power of a non-monomial group ring element");
            const auto& [e, c] = *terms_.begin();
            group_ring_element inv = of(*grp_, grp_->inverse(e), c.inverse());
            return inv.pow(-k);
        }
        group_ring_element acc = grp_ ? one(*grp_) : group_ring_element();
        group_ring_element base = *this;
        auto n = static_cast<unsigned long long>(k);
        while (n > 0) {
            if (n & 1) acc = acc * base;
            base = base * base;
            n >>= 1;
        }
        return acc;
    }

private:
    static const G* common_group(const group_ring_element& a, const group_ring_element& b) {
        if (!a.grp_ || a.terms_.empty()) return b.grp_ ? b.grp_ : a.grp_;
        if (!b.grp_ || b.terms_.empty()) return a.grp_;
        if (a.grp_ != b.grp_ && !(*a.grp_ == *b.grp_)) throw mismatched_groups();
        return a.grp_;
    }

    void add_term(const element& e, const gaussian_rational& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    const G* grp_ = nullptr;
    term_map terms_;
};

template <class G>
gaussian_rational trace(const group_ring_element<G>& a) {
    return a.trace();
}

template <class G>
group_ring_element<G> star(const group_ring_element<G>& a) {
    return a.star();
}

// tr(ab) = tr(ba); exposed as a checkable predicate.
template <class A>
bool trace_property_check(const A& a, const A& b) {
    return trace(a * b) == trace(b * a);
}

// Sum of diagonal traces of an exact idempotent matrix. The idempotent is not
// orthogonalized (no square roots exist over Q(i)); instead realness of the
// trace sum is verified.
template <class E>
rational dim_from_idempotent(const matrix<E>& p) {
    if (p.rows() != p.cols()) throw non_square("idempotent matrix must be square");
    if (!(p * p == p)) throw not_idempotent();
    gaussian_rational total(0);
    for (std::size_t i = 0; i < p.rows(); ++i) total += trace(p(i, i));
    if (!total.is_real()) throw non_real_trace();
    return total.re();
}

// Right multiplication by `a` on the group ring of a finite group, written in
// the basis given by the group elements.
inline matrix<gaussian_rational> regular_representation(const group_ring_element<finite_group>& a) {
    const finite_group* g = a.group();
    if (!g) throw unsupported_group("regular representation of a group-less zero");
    const std::uint32_t n = g->order();
    matrix<gaussian_rational> out(n, n);
    for (std::uint32_t h = 0; h < n; ++h) {
        for (const auto& [e, c] : a.terms()) {
            out(h, g->multiply(h, e)) += c;
        }
    }
    return out;
}

inline matrix<gaussian_rational> regular_representation(const finite_group& g,
                                                        const matrix<group_ring_element<finite_group>>& m) {
    const std::uint32_t n = g.order();
    matrix<gaussian_rational> out(m.rows() * n, m.cols() * n);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j).is_zero()) continue;
            const matrix<gaussian_rational> block = regular_representation(
                m(i, j).group() ? m(i, j) : group_ring_element<finite_group>(g));
            for (std::uint32_t r = 0; r < n; ++r)
                for (std::uint32_t c = 0; c < n; ++c) out(i * n + r, j * n + c) = block(r, c);
        }
    }
    return out;
}

// Conversions between the group ring of Z^n and Laurent polynomials; the two
// are the same ring under exponent-vector <-> monomial.
inline laurent_poly to_laurent(const group_ring_element<free_abelian_group>& a) {
    const free_abelian_group* g = a.group();
    const int nvars = g ? g->rank() : 0;
    laurent_poly out(nvars);
    for (const auto& [e, c] : a.terms()) {
        out += laurent_poly::monomial(nvars, e, c);
    }
    return out;
}

inline group_ring_element<free_abelian_group> from_laurent(const free_abelian_group& g,
                                                           const laurent_poly& p) {
    if (p.vars() != g.rank() && !p.is_constant())
        throw mismatched_groups("Laurent polynomial arity does not match the group rank");
    laurent_poly q = p.vars() == g.rank() ? p : p.promoted(g.rank());
    group_ring_element<free_abelian_group> out(g);
    for (const auto& [e, c] : q.terms()) {
        out += group_ring_element<free_abelian_group>::of(g, e, c);
    }
    return out;
}

inline matrix<laurent_poly> to_laurent(const free_abelian_group& g,
                                       const matrix<group_ring_element<free_abelian_group>>& m) {
    matrix<laurent_poly> out(m.rows(), m.cols(), laurent_poly(g.rank()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) out(i, j) = to_laurent(m(i, j));
    return out;
}

} // namespace l2lab

#endif
