#ifndef L2LAB_DIMENSION_HPP
#define L2LAB_DIMENSION_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "crossed_product.hpp"
#include "group_ring.hpp"
#include "linalg.hpp"

namespace l2lab {

enum class rank_engine { abelian, finite, crossed, free_oracle };

inline std::string engine_name(rank_engine e) {
    switch (e) {
        case rank_engine::abelian: return "abelian";
        case rank_engine::finite: return "finite";
        case rank_engine::crossed: return "crossed";
        case rank_engine::free_oracle: return "free-oracle";
    }
    return "?";
}

// An exact nonnegative rational with provenance: which backend produced it
// and whether the value is certified or came from the sampling oracle.
struct dimension_value {
    rational value;
    rank_engine engine = rank_engine::abelian;
    bool exact = true;
};

// Sampling parameters for the free-group rank oracle.
struct oracle_config {
    std::vector<unsigned> ladder{2, 4, 6, 8};
    unsigned samples_per_rung = 3;
    std::uint64_t seed = 0;
};

namespace detail {

template <class G>
struct ring_traits;

template <>
struct ring_traits<free_abelian_group> {
    using element = group_ring_element<free_abelian_group>;
};
template <>
struct ring_traits<finite_group> {
    using element = group_ring_element<finite_group>;
};
template <>
struct ring_traits<free_group> {
    using element = group_ring_element<free_group>;
};
template <class Base>
struct ring_traits<crossed_product<Base>> {
    using element = crossed_element<crossed_product<Base>>;
};

} // namespace detail

template <class Ctx>
using ring_element_t = typename detail::ring_traits<Ctx>::element;

template <class Ctx>
constexpr rank_engine engine_for() {
    if constexpr (std::is_same_v<Ctx, free_abelian_group>) return rank_engine::abelian;
    if constexpr (std::is_same_v<Ctx, finite_group>) return rank_engine::finite;
    if constexpr (std::is_same_v<Ctx, free_group>) return rank_engine::free_oracle;
    return rank_engine::crossed;
}

// ---------------------------------------------------------------------------
// rank_gamma: the von Neumann rank of the image of right multiplication by a
// group ring matrix, per group family.
// ---------------------------------------------------------------------------

// Z^n: a matrix over C[z1^±,...,zn^±] acts on square-integrable functions on
// the n-torus. A nonzero Laurent polynomial vanishes only on a measure-zero
// subset of the torus, so invertibility over measurable functions is
// equivalent to invertibility over the rational function field, and the
// dimension of the image equals the rank over that field.
inline dimension_value rank_gamma(const free_abelian_group& g,
                                  const matrix<group_ring_element<free_abelian_group>>& a,
                                  const oracle_config& = {}) {
    const std::size_t r = rank_exact(to_laurent(g, a));
    return {rational(r), rank_engine::abelian, true};
}

// Finite groups: blow up to the regular representation over Q(i) and divide
// the scalar rank by the group order.
inline dimension_value rank_gamma(const finite_group& g,
                                  const matrix<group_ring_element<finite_group>>& a,
                                  const oracle_config& = {}) {
    const std::size_t r = field_rank(regular_representation(g, a));
    return {rational(r) / g.order(), rank_engine::finite, true};
}

// Crossed products with finite acting group: restrict along the free base
// module with basis mu(H) and divide by |H|; dimensions are compatible with
// this induction.
template <class Base>
dimension_value rank_gamma(const crossed_product<Base>& cp,
                           const matrix<crossed_element<crossed_product<Base>>>& a,
                           const oracle_config& cfg = {}) {
    const dimension_value base_rank = rank_gamma(cp.base(), regular_representation(cp, a), cfg);
    return {base_rank.value / cp.act_order(), rank_engine::crossed, base_rank.exact};
}

namespace detail {

// Forced free-group ranks. The group ring of a free group embeds in a
// division ring in which every nonzero element is invertible, so two
// reductions are rank-exact:
//   - a row whose single nonzero entry sits at column j contributes 1, and
//     deleting its row and column leaves the rank of the rest unchanged
//     (clearing column j only touches that row);
//   - symmetrically for a column with a single nonzero entry.
// Iterating these, a matrix that peels down to nothing has a certified rank.
inline std::optional<std::size_t> forced_free_rank(
    const matrix<group_ring_element<free_group>>& a) {
    const std::size_t n = a.rows(), m = a.cols();
    std::vector<bool> row_gone(n, false), col_gone(m, false);
    std::vector<std::vector<bool>> nz(n, std::vector<bool>(m, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) nz[i][j] = !a(i, j).is_zero();

    std::size_t rank = 0;
    for (;;) {
        bool any_nonzero = false;
        bool peeled = false;
        for (std::size_t i = 0; i < n && !peeled; ++i) {
            if (row_gone[i]) continue;
            std::size_t count = 0, last = m;
            for (std::size_t j = 0; j < m; ++j) {
                if (!col_gone[j] && nz[i][j]) {
                    ++count;
                    last = j;
                }
            }
            if (count > 0) any_nonzero = true;
            if (count == 1) {
                row_gone[i] = true;
                col_gone[last] = true;
                ++rank;
                peeled = true;
            }
        }
        for (std::size_t j = 0; j < m && !peeled; ++j) {
            if (col_gone[j]) continue;
            std::size_t count = 0, last = n;
            for (std::size_t i = 0; i < n; ++i) {
                if (!row_gone[i] && nz[i][j]) {
                    ++count;
                    last = i;
                }
            }
            if (count == 1) {
                row_gone[last] = true;
                col_gone[j] = true;
                ++rank;
                peeled = true;
            }
        }
        if (peeled) continue;
        if (!any_nonzero) return rank;
        // A single surviving row (or column) of any support still has rank 1.
        std::size_t live_rows = 0, live_cols = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (!row_gone[i]) ++live_rows;
        for (std::size_t j = 0; j < m; ++j)
            if (!col_gone[j]) ++live_cols;
        if (live_rows == 1 || live_cols == 1) return rank + 1;
        return std::nullopt;
    }
}

inline matrix<gaussian_rational> random_invertible(std::mt19937_64& rng, unsigned d) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    for (int attempt = 0; attempt < 64; ++attempt) {
        matrix<gaussian_rational> x(d, d);
        for (unsigned i = 0; i < d; ++i)
            for (unsigned j = 0; j < d; ++j)
                x(i, j) = gaussian_rational(rational(num(rng), den(rng)));
        if (field_rank(x) == d) return x;
    }
    throw error("failed to sample an invertible matrix");
}

} // namespace detail

// Free groups: exact where the rank is forced by the structure of the matrix;
// otherwise a Monte Carlo oracle that evaluates the generators at random
// invertible d x d matrices along a ladder of sizes, declaring the value
// stable when two consecutive rungs agree. Oracle results are flagged.
inline dimension_value rank_gamma(const free_group& g,
                                  const matrix<group_ring_element<free_group>>& a,
                                  const oracle_config& cfg = {}) {
    if (const auto forced = detail::forced_free_rank(a)) {
        return {rational(*forced), rank_engine::free_oracle, true};
    }
    std::mt19937_64 rng(cfg.seed);
    const int k = g.rank();
    rational previous(-1);
    rational current(0);
    for (const unsigned d : cfg.ladder) {
        rational best(0);
        for (unsigned s = 0; s < cfg.samples_per_rung; ++s) {
            std::vector<matrix<gaussian_rational>> gens, gens_inv;
            for (int t = 0; t < k; ++t) {
                matrix<gaussian_rational> x = detail::random_invertible(rng, d);
                gens_inv.push_back(*field_inverse(x));
                gens.push_back(std::move(x));
            }
            const auto word_matrix = [&](const free_group::element& w) {
                matrix<gaussian_rational> acc =
                    matrix<gaussian_rational>::identity(d, gaussian_rational(1));
                for (std::int32_t letter : w) {
                    acc = acc * (letter > 0 ? gens[letter - 1] : gens_inv[-letter - 1]);
                }
                return acc;
            };
            matrix<gaussian_rational> blown(a.rows() * d, a.cols() * d);
            for (std::size_t i = 0; i < a.rows(); ++i) {
                for (std::size_t j = 0; j < a.cols(); ++j) {
                    matrix<gaussian_rational> entry(d, d);
                    for (const auto& [w, c] : a(i, j).terms()) {
                        const matrix<gaussian_rational> wm = word_matrix(w);
                        for (unsigned r = 0; r < d; ++r)
                            for (unsigned cidx = 0; cidx < d; ++cidx)
                                entry(r, cidx) += c * wm(r, cidx);
                    }
                    for (unsigned r = 0; r < d; ++r)
                        for (unsigned cidx = 0; cidx < d; ++cidx)
                            blown(i * d + r, j * d + cidx) = entry(r, cidx);
                }
            }
            const rational sample = rational(field_rank(blown)) / d;
            if (sample > best) best = sample;
        }
        current = best;
        if (current == previous) break;
        previous = current;
    }
    return {current, rank_engine::free_oracle, false};
}

// ---------------------------------------------------------------------------
// Finitely presented modules and their dimensions.
// ---------------------------------------------------------------------------

// Presentation convention: rows = rank of the target free module, columns =
// relations, so the module is coker(R^m -> R^n).
template <class Ctx>
struct presented_module {
    const Ctx* context = nullptr;
    matrix<ring_element_t<Ctx>> relations;

    std::size_t free_rank() const { return relations.rows(); }
    std::size_t relation_count() const { return relations.cols(); }
};

template <class Ctx>
presented_module<Ctx> make_module(const Ctx& ctx, matrix<ring_element_t<Ctx>> relations) {
    return {&ctx, std::move(relations)};
}

template <class Ctx>
presented_module<Ctx> free_module(const Ctx& ctx, std::size_t rank) {
    return {&ctx, matrix<ring_element_t<Ctx>>(rank, 0)};
}

template <class Ctx>
dimension_value dim_fp(const presented_module<Ctx>& m, const oracle_config& cfg = {}) {
    dimension_value r = rank_gamma(*m.context, m.relations, cfg);
    r.value = rational(m.free_rank()) - r.value;
    return r;
}

// dim of the extension presented by [[A_sub, C],[0, A_quot]] equals
// dim(sub) + dim(quot); exact backends must always satisfy this. The
// coupling block is assembled internally as C = A_sub * lift, so that the
// relations it couples in stay inside the column span of A_sub: column
// operations then reduce the assembled matrix to the block sum, which is
// what makes the assembled module an extension of the two cokernels in the
// first place (an arbitrary C block would quotient the submodule further).
template <class Ctx>
bool additivity_check(const Ctx& ctx, const matrix<ring_element_t<Ctx>>& a_sub,
                      const matrix<ring_element_t<Ctx>>& a_quot,
                      const matrix<ring_element_t<Ctx>>& lift, const oracle_config& cfg = {}) {
    if (lift.rows() != a_sub.cols() || lift.cols() != a_quot.cols())
        throw error("coupling lift must be relations(sub) x relations(quot)");
    const auto assembled = block_triangular(a_sub, a_quot, a_sub * lift);
    const dimension_value whole = dim_fp(make_module(ctx, assembled), cfg);
    const dimension_value sub = dim_fp(make_module(ctx, a_sub), cfg);
    const dimension_value quot = dim_fp(make_module(ctx, a_quot), cfg);
    return whole.value == sub.value + quot.value;
}

template <class Ctx>
bool additivity_check(const Ctx& ctx, const matrix<ring_element_t<Ctx>>& a_sub,
                      const matrix<ring_element_t<Ctx>>& a_quot, const oracle_config& cfg = {}) {
    return additivity_check(ctx, a_sub, a_quot,
                            matrix<ring_element_t<Ctx>>(a_sub.cols(), a_quot.cols()), cfg);
}

} // namespace l2lab

#endif
