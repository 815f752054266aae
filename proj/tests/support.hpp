#ifndef L2LAB_TESTS_SUPPORT_HPP
#define L2LAB_TESTS_SUPPORT_HPP

#include <random>
#include <vector>

#include <l2lab/crossed_product.hpp>
#include <l2lab/group_ring.hpp>
#include <l2lab/linalg.hpp>
#include <l2lab/rational_function.hpp>

namespace testkit {

using namespace l2lab;

struct rng {
    std::mt19937_64 eng;
    explicit rng(std::uint64_t seed) : eng(seed) {}

    int uniform(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(eng);
    }
    bool coin() { return uniform(0, 1) == 1; }
};

inline rational rand_rational(rng& r, int span = 9) {
    return rational(r.uniform(-span, span), r.uniform(1, 5));
}

inline gaussian_rational rand_gaussian(rng& r, int span = 9) {
    return gaussian_rational(rand_rational(r, span), r.coin() ? rand_rational(r, span) : rational(0));
}

inline gaussian_rational rand_gaussian_nonzero(rng& r, int span = 9) {
    for (;;) {
        gaussian_rational g = rand_gaussian(r, span);
        if (!g.is_zero()) return g;
    }
}

inline laurent_poly rand_laurent(rng& r, int nvars, int max_terms = 3, int max_exp = 2) {
    laurent_poly p(nvars);
    const int terms = r.uniform(0, max_terms);
    for (int t = 0; t < terms; ++t) {
        laurent_poly::exponents e(static_cast<std::size_t>(nvars));
        for (auto& x : e) x = r.uniform(-max_exp, max_exp);
        p += laurent_poly::monomial(nvars, std::move(e), rand_gaussian(r, 4));
    }
    return p;
}

inline laurent_poly rand_laurent_nonzero(rng& r, int nvars, int max_terms = 3, int max_exp = 2) {
    for (;;) {
        laurent_poly p = rand_laurent(r, nvars, max_terms, max_exp);
        if (!p.is_zero()) return p;
    }
}

inline rational_function rand_rational_function(rng& r, int nvars, int max_terms = 3,
                                                int max_exp = 2) {
    return rational_function(rand_laurent(r, nvars, max_terms, max_exp),
                             rand_laurent_nonzero(r, nvars, max_terms, max_exp));
}

inline group_ring_element<free_abelian_group> rand_abelian_element(const free_abelian_group& g,
                                                                   rng& r, int max_terms = 3,
                                                                   int max_exp = 2) {
    return from_laurent(g, rand_laurent(r, g.rank(), max_terms, max_exp));
}

inline group_ring_element<free_group> rand_free_element(const free_group& g, rng& r,
                                                        int max_terms = 3, int max_len = 3) {
    using gre = group_ring_element<free_group>;
    gre out(g);
    const int terms = r.uniform(0, max_terms);
    for (int t = 0; t < terms; ++t) {
        free_group::element w = g.identity();
        const int len = r.uniform(0, max_len);
        for (int k = 0; k < len; ++k) {
            const int gen = r.uniform(0, g.rank() - 1);
            w = g.multiply(w, r.coin() ? g.generator(gen) : g.inverse(g.generator(gen)));
        }
        out += gre::of(g, std::move(w), rand_gaussian(r, 4));
    }
    return out;
}

inline group_ring_element<finite_group> rand_finite_element(const finite_group& g, rng& r,
                                                            int max_terms = 3) {
    using gre = group_ring_element<finite_group>;
    gre out(g);
    const int terms = r.uniform(0, max_terms);
    for (int t = 0; t < terms; ++t) {
        out += gre::of(g, static_cast<finite_group::element>(r.uniform(0, g.order() - 1)),
                       rand_gaussian(r, 4));
    }
    return out;
}

template <class Base>
crossed_element<crossed_product<Base>> rand_crossed_element(const crossed_product<Base>& cp, rng& r,
                                                            int max_terms = 2, int max_exp = 2) {
    using ce = crossed_element<crossed_product<Base>>;
    ce out(cp);
    const int terms = r.uniform(0, max_terms);
    for (int t = 0; t < terms; ++t) {
        const auto h = static_cast<finite_group::element>(r.uniform(0, cp.act_order() - 1));
        if constexpr (std::is_same_v<Base, free_abelian_group>) {
            out = out + ce::section(cp, h) * ce::from_base(cp, rand_abelian_element(cp.base(), r, 2,
                                                                                    max_exp));
        } else {
            out = out + ce::section(cp, h) * ce::from_base(cp, rand_finite_element(cp.base(), r, 2));
        }
    }
    return out;
}

template <class E, class F>
matrix<E> rand_matrix(std::size_t rows, std::size_t cols, F&& gen) {
    matrix<E> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = gen();
    return m;
}

// Independent numeric oracle for ranks over the rational function field:
// substitute random rational points (avoiding denominator zeros) and take a
// plain scalar rank over Q(i).
inline std::size_t evaluation_rank(const matrix<rational_function>& m, int nvars, rng& r) {
    for (;;) {
        std::vector<gaussian_rational> point;
        for (int k = 0; k < nvars; ++k)
            point.emplace_back(rational(r.uniform(-99, 99), r.uniform(1, 97)));
        bool ok = true;
        for (const auto& c : point)
            if (c.is_zero()) ok = false; // negative exponents need invertible coordinates
        for (std::size_t i = 0; i < m.rows() && ok; ++i)
            for (std::size_t j = 0; j < m.cols() && ok; ++j)
                if (m(i, j).den().evaluate(point).is_zero()) ok = false;
        if (!ok) continue;
        matrix<gaussian_rational> num(m.rows(), m.cols());
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) num(i, j) = m(i, j).evaluate(point);
        return field_rank(num);
    }
}

} // namespace testkit

#endif
