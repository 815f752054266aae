#ifndef L2LAB_LOCALIZATION_HPP
#define L2LAB_LOCALIZATION_HPP

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "dimension.hpp"
#include "group_ring.hpp"
#include "linalg.hpp"

namespace l2lab {

// ---------------------------------------------------------------------------
// Ore fractions over a declared Ore set.
// ---------------------------------------------------------------------------

// A declared right Ore set in a ring R: a membership predicate together with
// an oracle producing, for (a, s) in R x T, a pair (b, t) in R x T with
// a t = s b. Arithmetic on fractions is mediated entirely by the oracle, so
// a commutative base gets the classical calculus and a noncommutative base
// without an oracle fails loudly.
template <class R>
struct ore_set {
    std::function<bool(const R&)> member;
    std::function<std::optional<std::pair<R, R>>(const R&, const R&)> right_pair;

    // Spot checks on sample members: 0 is excluded, products stay in the set,
    // and members do not kill the probe elements (non-zerodivisor check).
    void spot_check(const std::vector<R>& samples, const std::vector<R>& probes) const {
        for (const R& s : samples) {
            if (s.is_zero() || !member(s)) throw error("Ore set sample fails membership");
            for (const R& t : samples) {
                if (!member(s * t)) throw error("Ore set is not closed under products");
            }
            for (const R& p : probes) {
                if (p.is_zero()) continue;
                if ((s * p).is_zero() || (p * s).is_zero())
                    throw error("Ore set member is a zerodivisor");
            }
        }
    }
};

// All nonzero Laurent polynomials (the non-zerodivisors of the domain).
inline ore_set<laurent_poly> nonzero_laurent_set() {
    ore_set<laurent_poly> t;
    t.member = [](const laurent_poly& p) { return !p.is_zero(); };
    t.right_pair = [](const laurent_poly& a,
                      const laurent_poly& s) -> std::optional<std::pair<laurent_poly, laurent_poly>> {
        return std::pair<laurent_poly, laurent_poly>{a, s}; // a s = s a
    };
    return t;
}

// Single-term Laurent polynomials with nonzero coefficient (monomial units
// and their scalar multiples), e.g. the powers of the variables.
inline ore_set<laurent_poly> monomial_laurent_set() {
    ore_set<laurent_poly> t = nonzero_laurent_set();
    t.member = [](const laurent_poly& p) { return p.term_count() == 1; };
    return t;
}

template <class R>
struct ore_fraction {
    R num;
    R den;
};

template <class R>
ore_fraction<R> make_ore_fraction(const ore_set<R>& t, R num, R den) {
    if (!t.member(den)) throw error("denominator is not a member of the Ore set");
    return {std::move(num), std::move(den)};
}

namespace detail {

template <class R>
std::pair<R, R> ore_pair_or_throw(const ore_set<R>& t, const R& a, const R& s) {
    if (!t.right_pair) throw unsupported_oracle();
    auto p = t.right_pair(a, s);
    if (!p) throw unsupported_oracle();
    return *p;
}

} // namespace detail

// Equivalence of fractions: (a, t) ~ (b, s) iff there are u, v with
// a u = b v, t u = s v and t u in T. Witnesses come from the Ore pair
// oracle applied to the denominators.
template <class R>
bool ore_eq(const ore_set<R>& t, const ore_fraction<R>& f, const ore_fraction<R>& g) {
    // The oracle turns the denominators into a common right multiple
    // f.den * t2 = g.den * b2; the fractions agree iff the numerators do
    // after the same right scaling.
    const auto [b2, t2] = detail::ore_pair_or_throw(t, f.den, g.den);
    return f.num * t2 == g.num * b2;
}

template <class R>
ore_fraction<R> ore_add(const ore_set<R>& t, const ore_fraction<R>& f, const ore_fraction<R>& g) {
    const auto [b2, t2] = detail::ore_pair_or_throw(t, f.den, g.den); // f.den t2 = g.den b2 =: D
    R common = f.den * t2;
    if (!t.member(common)) throw unsupported_oracle("oracle left the Ore set");
    return {f.num * t2 + g.num * b2, std::move(common)};
}

template <class R>
ore_fraction<R> ore_neg(const ore_fraction<R>& f) {
    return {-f.num, f.den};
}

template <class R>
ore_fraction<R> ore_sub(const ore_set<R>& t, const ore_fraction<R>& f, const ore_fraction<R>& g) {
    return ore_add(t, f, ore_neg(g));
}

// (a t^-1)(b s^-1) = a (t^-1 b) s^-1 with t^-1 b rewritten as b~ t~^-1 by the
// oracle: b t~ = t b~.
template <class R>
ore_fraction<R> ore_mul(const ore_set<R>& t, const ore_fraction<R>& f, const ore_fraction<R>& g) {
    const auto [bt, tt] = detail::ore_pair_or_throw(t, g.num, f.den); // g.num * tt = f.den * bt
    R den = g.den * tt;
    if (!t.member(den)) throw unsupported_oracle("oracle left the Ore set");
    return {f.num * bt, std::move(den)};
}

// ---------------------------------------------------------------------------
// The Ore-failure certificate for free groups.
// ---------------------------------------------------------------------------

// Exact verification that (u, v) |-> a u + b v has zero kernel on the pairs
// supported in the ball of the given radius. For a = x-1, b = y-1 over the
// free group on x, y this certifies, radius by radius, the injectivity that
// contradicts the right Ore condition for the group ring.
struct ore_certificate {
    unsigned radius = 0;
    std::size_t kernel_dimension = 0;
    bool certified = false;
    std::optional<std::pair<group_ring_element<free_group>, group_ring_element<free_group>>> witness;
};

inline ore_certificate ore_failure_certificate(const free_group& g,
                                               const group_ring_element<free_group>& a,
                                               const group_ring_element<free_group>& b,
                                               unsigned radius) {
    if (radius < 1) throw error("certificate radius must be at least 1");
    std::size_t shift = 0;
    for (const auto& [w, c] : a.terms()) shift = std::max(shift, w.size());
    for (const auto& [w, c] : b.terms()) shift = std::max(shift, w.size());

    const std::vector<free_group::element> domain = g.ball(radius);
    const std::vector<free_group::element> image = g.ball(radius + static_cast<unsigned>(shift));
    std::map<free_group::element, std::size_t, free_group::element_less> image_index;
    for (std::size_t k = 0; k < image.size(); ++k) image_index.emplace(image[k], k);

    // Columns: u-coordinates first, then v-coordinates; rows: image words.
    matrix<gaussian_rational> m(image.size(), 2 * domain.size());
    const auto fill = [&](const group_ring_element<free_group>& mult, std::size_t col_offset) {
        for (std::size_t k = 0; k < domain.size(); ++k) {
            for (const auto& [w, c] : mult.terms()) {
                m(image_index.at(g.multiply(w, domain[k])), col_offset + k) += c;
            }
        }
    };
    fill(a, 0);
    fill(b, domain.size());

    const auto kernel = kernel_basis(m);
    ore_certificate out;
    out.radius = radius;
    out.kernel_dimension = kernel.size();
    out.certified = kernel.empty();
    if (!kernel.empty()) {
        group_ring_element<free_group> u(g), v(g);
        for (std::size_t k = 0; k < domain.size(); ++k) {
            u += group_ring_element<free_group>::of(g, domain[k], kernel[0][k]);
            v += group_ring_element<free_group>::of(g, domain[k], kernel[0][domain.size() + k]);
        }
        out.witness = {std::move(u), std::move(v)};
    }
    return out;
}

inline ore_certificate ore_failure_certificate(const free_group& g, unsigned radius) {
    using gre = group_ring_element<free_group>;
    const gre a = gre::of(g, g.generator(0)) - gre::one(g);
    const gre b = gre::of(g, g.generator(1)) - gre::one(g);
    return ore_failure_certificate(g, a, b, radius);
}

// ---------------------------------------------------------------------------
// Sigma membership and Cramer factorization over Z^n.
// ---------------------------------------------------------------------------

// Membership in Sigma(C[Z^n] -> measurable functions): a square Laurent
// matrix becomes invertible iff its determinant is a nonzero Laurent
// polynomial (nonzero functions on the torus are invertible almost
// everywhere).
inline bool sigma_member(const matrix<laurent_poly>& a) {
    if (a.rows() != a.cols()) throw non_square();
    return !det_exact(a).is_zero();
}

inline bool sigma_member(const free_abelian_group& g,
                         const matrix<group_ring_element<free_abelian_group>>& a) {
    return sigma_member(to_laurent(g, a));
}

// Free groups only get a sampled, uncertified verdict through the rank
// oracle.
struct sigma_verdict {
    bool member = false;
    bool certified = false;
};

inline sigma_verdict sigma_member_free(const free_group& g,
                                       const matrix<group_ring_element<free_group>>& a,
                                       const oracle_config& cfg = {}) {
    if (a.rows() != a.cols()) throw non_square();
    const dimension_value r = rank_gamma(g, a, cfg);
    return {r.value == rational(a.rows()), r.exact};
}

// Witness for the factorization s (1 (+) a) (1 with x block) = b produced by
// Cramer's rule, in the canonical shape with x = 0 and s the diagonal of row
// denominator products.
struct cramer_witness {
    matrix<laurent_poly> s;          // (1+k) x (1+k), diagonal, det != 0
    matrix<rational_function> x;     // 1 x l, zero
    matrix<laurent_poly> b;          // (1+k) x (1+l), over the base ring
    std::size_t a_rows = 0;
    std::size_t a_cols = 0;

    matrix<rational_function> unit_factor() const {
        const std::size_t n = 1 + a_cols;
        matrix<rational_function> u = matrix<rational_function>::identity(n, rational_function(1));
        for (std::size_t j = 0; j < a_cols; ++j) u(0, 1 + j) = x(0, j);
        return u;
    }

    bool verify(const matrix<rational_function>& a) const {
        if (a.rows() != a_rows || a.cols() != a_cols) return false;
        matrix<rational_function> padded(1 + a_rows, 1 + a_cols, rational_function(0));
        padded(0, 0) = rational_function(1);
        for (std::size_t i = 0; i < a_rows; ++i)
            for (std::size_t j = 0; j < a_cols; ++j) padded(1 + i, 1 + j) = a(i, j);
        const auto lhs = s.map([](const laurent_poly& p) { return rational_function(p); }) * padded *
                         unit_factor();
        const auto rhs = b.map([](const laurent_poly& p) { return rational_function(p); });
        if (!(lhs == rhs)) return false;
        return sigma_member(s);
    }
};

inline cramer_witness cramer_factorize(const matrix<rational_function>& a) {
    const std::size_t k = a.rows(), l = a.cols();
    cramer_witness w;
    w.a_rows = k;
    w.a_cols = l;
    w.s = matrix<laurent_poly>(1 + k, 1 + k);
    w.s(0, 0) = laurent_poly::constant(0, gaussian_rational(1));
    w.x = matrix<rational_function>(1, l, rational_function(0));
    w.b = matrix<laurent_poly>(1 + k, 1 + l);
    w.b(0, 0) = laurent_poly::constant(0, gaussian_rational(1));
    for (std::size_t i = 0; i < k; ++i) {
        laurent_poly row_den = laurent_poly::constant(0, gaussian_rational(1));
        for (std::size_t j = 0; j < l; ++j) row_den *= a(i, j).den();
        for (std::size_t j = 0; j < l; ++j) {
            w.b(1 + i, 1 + j) = a(i, j).num() * row_den.divide_exact(a(i, j).den());
        }
        w.s(1 + i, 1 + i) = std::move(row_den);
    }
    if (!w.verify(a)) throw error("Cramer witness failed its defining identity");
    return w;
}

// ---------------------------------------------------------------------------
// Rational closure linearization.
// ---------------------------------------------------------------------------

// Exhibits f = p/q as an entry of the inverse of a matrix over the base
// ring: M = [[q, -p],[0, 1]] lies in Sigma and
// M^-1 = [[1/q, p/q],[0, 1]] carries f at position (0, 1).
struct linearization {
    matrix<laurent_poly> mat;
    matrix<rational_function> inverse;
};

inline linearization rational_closure_linearize(const rational_function& f) {
    const int v = std::max(f.num().vars(), f.den().vars());
    linearization out;
    out.mat = matrix<laurent_poly>(2, 2, laurent_poly(v));
    out.mat(0, 0) = f.den();
    out.mat(0, 1) = -f.num();
    out.mat(1, 1) = laurent_poly::constant(v, gaussian_rational(1));
    out.inverse = matrix<rational_function>(2, 2, rational_function(0));
    out.inverse(0, 0) = rational_function(laurent_poly::constant(v, gaussian_rational(1)), f.den());
    out.inverse(0, 1) = f;
    out.inverse(1, 1) = rational_function(1);
    const auto lhs = out.mat.map([](const laurent_poly& p) { return rational_function(p); }) *
                     out.inverse;
    if (!(lhs == matrix<rational_function>::identity(2, rational_function(1))) ||
        !sigma_member(out.mat)) {
        throw error("linearization failed verification");
    }
    return out;
}

} // namespace l2lab

#endif
