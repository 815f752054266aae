#ifndef L2LAB_CHAIN_COMPLEX_HPP
#define L2LAB_CHAIN_COMPLEX_HPP

#include <string>
#include <vector>

#include "dimension.hpp"

namespace l2lab {

// Finite complex of finitely generated free modules over a group ring:
// ranks n_0..n_N and boundary matrices d_p of shape n_{p-1} x n_p with
// d_p d_{p+1} = 0. Degenerate complexes (length zero, zero ranks) are fine.
template <class Ctx>
struct free_chain_complex {
    const Ctx* context = nullptr;
    std::vector<std::size_t> ranks;                     // n_0 .. n_N
    std::vector<matrix<ring_element_t<Ctx>>> boundaries; // d_1 .. d_N

    std::size_t top_degree() const { return ranks.empty() ? 0 : ranks.size() - 1; }

    const matrix<ring_element_t<Ctx>>& boundary(std::size_t p) const { return boundaries[p - 1]; }

    void validate() const {
        if (ranks.empty()) throw invalid_complex("a complex needs at least degree zero");
        if (boundaries.size() + 1 != ranks.size())
            throw invalid_complex("expected one boundary matrix per positive degree");
        for (std::size_t p = 1; p < ranks.size(); ++p) {
            const auto& d = boundary(p);
            if (d.rows() != ranks[p - 1] || d.cols() != ranks[p])
                throw invalid_complex("boundary d" + std::to_string(p) + " has the wrong shape");
        }
        for (std::size_t p = 1; p + 1 < ranks.size(); ++p) {
            if (!(boundary(p) * boundary(p + 1)).is_zero())
                throw invalid_complex("d" + std::to_string(p) + " d" + std::to_string(p + 1) +
                                      " is nonzero");
        }
    }

    // Same complex shifted up one degree: a fresh zero slot in degree 0.
    free_chain_complex shifted() const {
        free_chain_complex out;
        out.context = context;
        out.ranks.push_back(0);
        out.ranks.insert(out.ranks.end(), ranks.begin(), ranks.end());
        out.boundaries.push_back(matrix<ring_element_t<Ctx>>(0, ranks.empty() ? 0 : ranks[0]));
        out.boundaries.insert(out.boundaries.end(), boundaries.begin(), boundaries.end());
        return out;
    }
};

template <class Ctx>
free_chain_complex<Ctx> make_complex(const Ctx& ctx, std::vector<std::size_t> ranks,
                                     std::vector<matrix<ring_element_t<Ctx>>> boundaries) {
    free_chain_complex<Ctx> c{&ctx, std::move(ranks), std::move(boundaries)};
    c.validate();
    return c;
}

struct betti_report {
    std::vector<dimension_value> betti;
    rational euler;
    bool exact = true;
};

// b_p = n_p - r_p - r_{p+1}, with r_p the rank of d_p (r_0 = r_{N+1} = 0).
// Over the regular surrogates this is the dimension of the p-th homology of
// the complex after tensoring.
template <class Ctx>
betti_report l2_betti(const free_chain_complex<Ctx>& c, const oracle_config& cfg = {}) {
    c.validate();
    const std::size_t n = c.ranks.size();
    std::vector<dimension_value> r(n + 1, dimension_value{rational(0), engine_for<Ctx>(), true});
    for (std::size_t p = 1; p < n; ++p) r[p] = rank_gamma(*c.context, c.boundary(p), cfg);

    betti_report out;
    out.euler = 0;
    for (std::size_t p = 0; p < n; ++p) {
        dimension_value b{rational(c.ranks[p]) - r[p].value - r[p + 1].value, engine_for<Ctx>(),
                          r[p].exact && r[p + 1].exact};
        out.exact = out.exact && b.exact;
        out.euler += (p % 2 == 0) ? b.value : -b.value;
        out.betti.push_back(std::move(b));
    }
    // The alternating rank sums cancel, so the L2 Euler characteristic equals
    // the ordinary one. Asserted for exact backends.
    if (out.exact) {
        rational plain(0);
        for (std::size_t p = 0; p < n; ++p)
            plain += (p % 2 == 0) ? rational(c.ranks[p]) : -rational(c.ranks[p]);
        if (plain != out.euler) throw error("Euler characteristic bookkeeping failed");
    }
    return out;
}

template <class Ctx>
rational euler_characteristic(const free_chain_complex<Ctx>& c, const oracle_config& cfg = {}) {
    return l2_betti(c, cfg).euler;
}

// ---------------------------------------------------------------------------
// Tor dimensions against a supplied free resolution.
// ---------------------------------------------------------------------------

template <class Ctx>
struct tor_report {
    std::vector<dimension_value> tor; // degrees 0..N
    bool exact = true;
    std::string caveat;               // e.g. resolution only validated generically
};

namespace detail {

template <class Ctx>
constexpr bool surrogate_is_flat() {
    // Tensoring with the surrogate is exact for Z^n, finite groups and their
    // finite crossed products; it is not for free groups, where that failure
    // is precisely what Tor measures.
    return !std::is_same_v<Ctx, free_group>;
}

} // namespace detail

// dim Tor_p(M; surrogate) computed from a user-supplied free resolution
// R: 0 -> F_N -> ... -> F_1 -> F_0 (-> M -> 0). Validation: d d = 0 over the
// ring, the augmentation rank-matches the presentation of M, and, over the
// flat backends where ring exactness survives tensoring, rank exactness in
// positive degrees. True exactness over the group ring itself is not
// certified; reports carry the caveat.
template <class Ctx>
tor_report<Ctx> tor_dims(const presented_module<Ctx>& m, const free_chain_complex<Ctx>& r,
                         const oracle_config& cfg = {}) {
    r.validate();
    const std::size_t n = r.ranks.size();
    if (r.ranks[0] != m.free_rank())
        throw invalid_resolution("resolution does not start at the presentation's free rank");

    std::vector<dimension_value> rk(n + 1, dimension_value{rational(0), engine_for<Ctx>(), true});
    for (std::size_t p = 1; p < n; ++p) rk[p] = rank_gamma(*r.context, r.boundary(p), cfg);

    // Augmentation: im(d_1) must match im(A) as column spans over the
    // surrogate (rank(A) = rank(d_1) = rank(A | d_1)).
    {
        const dimension_value ra = rank_gamma(*m.context, m.relations, cfg);
        const dimension_value rboth =
            n > 1 ? rank_gamma(*m.context, hstack(m.relations, r.boundary(1)), cfg) : ra;
        const rational r1 = n > 1 ? rk[1].value : rational(0);
        if (!(ra.value == r1 && rboth.value == ra.value))
            throw invalid_resolution("resolution does not augment to the module presentation");
    }

    tor_report<Ctx> out;
    if constexpr (detail::surrogate_is_flat<Ctx>()) {
        for (std::size_t p = 1; p < n; ++p) {
            if (rk[p].value + rk[p + 1].value != rational(r.ranks[p]))
                throw invalid_resolution("resolution is not exact over the surrogate in degree " +
                                         std::to_string(p));
        }
        out.caveat = "resolution validated generically over the flat surrogate";
    } else {
        out.caveat = "resolution validated by d*d = 0 and augmentation ranks only";
    }

    for (std::size_t p = 0; p < n; ++p) {
        dimension_value t{rational(r.ranks[p]) - rk[p].value - rk[p + 1].value, engine_for<Ctx>(),
                          rk[p].exact && rk[p + 1].exact};
        out.exact = out.exact && t.exact;
        out.tor.push_back(std::move(t));
    }
    if constexpr (std::is_same_v<Ctx, free_group>) {
        if (n <= 2) {
            out.caveat += "; length <= 1 resolution, so Tor_p = 0 for p >= 2 automatically";
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Universal coefficient bookkeeping.
// ---------------------------------------------------------------------------

// Per-degree description of the ring-level homology of a complex: a
// presentation plus a free resolution of that module (used for its Tor_1).
template <class Ctx>
struct homology_datum {
    presented_module<Ctx> module;
    free_chain_complex<Ctx> resolution;
};

// Checks b_n = dim(H_n (x) surrogate) + dim Tor_1(H_{n-1}; surrogate) in
// every degree of the complex, the dimension identity of the two-column
// universal coefficient sequence.
template <class Ctx>
bool uct_check(const free_chain_complex<Ctx>& c, const std::vector<homology_datum<Ctx>>& homology,
               const oracle_config& cfg = {}) {
    const betti_report report = l2_betti(c, cfg);
    if (homology.size() != c.ranks.size())
        throw invalid_resolution("need homology data in every degree of the complex");
    for (std::size_t p = 0; p < c.ranks.size(); ++p) {
        const rational direct = dim_fp(homology[p].module, cfg).value;
        rational torsion(0);
        if (p >= 1) {
            const auto t = tor_dims(homology[p - 1].module, homology[p - 1].resolution, cfg);
            if (t.tor.size() > 1) torsion = t.tor[1].value;
        }
        if (report.betti[p].value != direct + torsion) return false;
    }
    return true;
}

} // namespace l2lab

#endif
