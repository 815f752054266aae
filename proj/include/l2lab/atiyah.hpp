#ifndef L2LAB_ATIYAH_HPP
#define L2LAB_ATIYAH_HPP

#include <numeric>
#include <set>
#include <vector>

#include "dimension.hpp"

namespace l2lab {

// Integrality verdict: the dimension of a finitely presented module must lie
// in (1/l) Z, where l is the least common multiple of the orders of the
// declared finite subgroups. For crossed products the order set is declared
// input, so the verdict is conditional on that declaration.
struct integrality_verdict {
    dimension_value dim;
    unsigned long long lcm_orders = 1;
    bool pass = false;
    bool certified = false;
};

inline unsigned long long lcm_of_orders(const std::set<unsigned>& orders) {
    unsigned long long l = 1;
    for (unsigned o : orders) {
        if (o == 0) throw error("finite subgroup of order zero");
        l = std::lcm(l, static_cast<unsigned long long>(o));
    }
    return l;
}

template <class Ctx>
integrality_verdict atiyah_check(const presented_module<Ctx>& m, const oracle_config& cfg = {}) {
    integrality_verdict v;
    v.dim = dim_fp(m, cfg);
    v.lcm_orders = lcm_of_orders(finite_subgroup_orders(*m.context));
    v.pass = is_integer(v.dim.value * v.lcm_orders);
    v.certified = v.dim.exact;
    return v;
}

// Instance-level verification that dim_fp behaves as a faithful projective
// rank function: rho(free rank 1) = 1, rho >= 0, and additivity on block
// sums of the submitted samples.
struct rank_function_report {
    bool normalization = false;
    bool nonnegative = false;
    bool additive = false;
    std::size_t samples = 0;

    bool pass() const { return normalization && nonnegative && additive; }
};

template <class Ctx>
rank_function_report check_rank_function(const Ctx& ctx,
                                         const std::vector<presented_module<Ctx>>& samples,
                                         const oracle_config& cfg = {}) {
    rank_function_report rep;
    rep.samples = samples.size();
    rep.normalization = dim_fp(free_module(ctx, 1), cfg).value == 1;
    rep.nonnegative = true;
    for (const auto& m : samples) {
        if (dim_fp(m, cfg).value < 0) rep.nonnegative = false;
    }
    rep.additive = true;
    for (std::size_t k = 0; k + 1 < samples.size(); ++k) {
        const auto block = block_diagonal(samples[k].relations, samples[k + 1].relations);
        const rational whole = dim_fp(make_module(ctx, block), cfg).value;
        const rational parts =
            dim_fp(samples[k], cfg).value + dim_fp(samples[k + 1], cfg).value;
        if (whole != parts) rep.additive = false;
    }
    return rep;
}

} // namespace l2lab

#endif
