#include <catch2/catch_amalgamated.hpp>

#include <l2lab/dimension.hpp>

#include "support.hpp"

using namespace l2lab;

namespace {
using agre = group_ring_element<free_abelian_group>;
using fgre = group_ring_element<free_group>;
using cgre = group_ring_element<finite_group>;
using dihedral_t = crossed_product<free_abelian_group>;
using dce = crossed_element<dihedral_t>;

matrix<agre> abelian_1x1(const free_abelian_group&, const agre& x) {
    matrix<agre> m(1, 1);
    m(0, 0) = x;
    return m;
}
} // namespace

TEST_CASE("rank over the infinite cyclic group") {
    free_abelian_group z(1);
    const agre zm1 = agre::of(z, {1}) - agre::one(z);
    const dimension_value r = rank_gamma(z, abelian_1x1(z, zm1));
    CHECK(r.value == 1);
    CHECK(r.engine == rank_engine::abelian);
    CHECK(r.exact);

    // dim of C[z^±]/(z-1): the relation becomes invertible, the module dies.
    CHECK(dim_fp(make_module(z, abelian_1x1(z, zm1))).value == 0);
    CHECK(dim_fp(free_module(z, 1)).value == 1);
}

TEST_CASE("rank over finite groups") {
    finite_group z2 = finite_group::cyclic(2);
    matrix<cgre> m(1, 1);
    m(0, 0) = cgre::one(z2) + cgre::of(z2, 1);
    const dimension_value r = rank_gamma(z2, m);
    CHECK(r.value == rational(1, 2));
    CHECK(r.engine == rank_engine::finite);
    CHECK(dim_fp(make_module(z2, m)).value == rational(1, 2));
}

TEST_CASE("rank over free groups is forced on structured instances") {
    free_group f2(2);
    const fgre x1 = fgre::of(f2, f2.generator(0)) - fgre::one(f2);
    const fgre y1 = fgre::of(f2, f2.generator(1)) - fgre::one(f2);
    matrix<fgre> row(1, 2);
    row(0, 0) = x1;
    row(0, 1) = y1;
    const dimension_value r = rank_gamma(f2, row);
    CHECK(r.value == 1);
    CHECK(r.exact); // 1 x k with nonzero entries has forced rank 1
    CHECK(r.engine == rank_engine::free_oracle);

    // the augmented trivial module has dimension 0
    CHECK(dim_fp(make_module(f2, row)).value == 0);

    matrix<fgre> diag(2, 2, fgre(f2));
    diag(0, 0) = x1;
    diag(1, 1) = y1;
    const dimension_value rd = rank_gamma(f2, diag);
    CHECK(rd.value == 2);
    CHECK(rd.exact);

    CHECK(rank_gamma(f2, matrix<fgre>(2, 3, fgre(f2))).value == 0);
}

TEST_CASE("free group oracle stabilizes on non-forced instances") {
    free_group f2(2);
    const fgre x1 = fgre::of(f2, f2.generator(0)) - fgre::one(f2);
    const fgre y1 = fgre::of(f2, f2.generator(1)) - fgre::one(f2);

    // all four entries equal: rank 1, but not peelable
    matrix<fgre> same(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) same(i, j) = x1;
    const dimension_value r1 = rank_gamma(f2, same);
    CHECK(r1.value == 1);
    CHECK_FALSE(r1.exact);

    // [[x-1, 1],[1, y-1]] is invertible over the division ring:
    // row reduction gives 1 - (x-1)(y-1) != 0.
    matrix<fgre> full(2, 2);
    full(0, 0) = x1;
    full(0, 1) = fgre::one(f2);
    full(1, 0) = fgre::one(f2);
    full(1, 1) = y1;
    const dimension_value r2 = rank_gamma(f2, full);
    CHECK(r2.value == 2);
    CHECK_FALSE(r2.exact);

    // determinism per seed
    oracle_config cfg;
    cfg.seed = 1234;
    CHECK(rank_gamma(f2, full, cfg).value == rank_gamma(f2, full, cfg).value);
}

TEST_CASE("rank over the infinite dihedral crossed product") {
    const dihedral_t d = dihedral_infinite();
    matrix<dce> m(1, 1);
    m(0, 0) = dce::section(d, 1) - dce::one(d);
    const dimension_value r = rank_gamma(d, m);
    CHECK(r.value == rational(1, 2));
    CHECK(r.engine == rank_engine::crossed);
    CHECK(r.exact);
    CHECK(dim_fp(make_module(d, m)).value == rational(1, 2));
}

TEST_CASE("normalization: free modules have dimension equal to their rank") {
    free_abelian_group z2g(2);
    finite_group z3 = finite_group::cyclic(3);
    free_group f2(2);
    const dihedral_t d = dihedral_infinite();
    for (std::size_t n = 0; n <= 3; ++n) {
        CHECK(dim_fp(free_module(z2g, n)).value == rational(n));
        CHECK(dim_fp(free_module(z3, n)).value == rational(n));
        CHECK(dim_fp(free_module(f2, n)).value == rational(n));
        CHECK(dim_fp(free_module(d, n)).value == rational(n));
    }
}

TEST_CASE("faithfulness surrogate: rank zero iff the matrix is zero") {
    testkit::rng r(61);
    free_abelian_group g(2);
    finite_group z4 = finite_group::cyclic(4);
    for (int t = 0; t < 25; ++t) {
        auto m = testkit::rand_matrix<agre>(2, 2, [&] { return testkit::rand_abelian_element(g, r); });
        CHECK((rank_gamma(g, m).value == 0) == m.is_zero());

        auto f = testkit::rand_matrix<cgre>(2, 2, [&] { return testkit::rand_finite_element(z4, r); });
        CHECK((rank_gamma(z4, f).value == 0) == f.is_zero());
    }
}

TEST_CASE("monotony surrogate: appending columns never lowers the rank") {
    testkit::rng r(67);
    free_abelian_group g(2);
    for (int t = 0; t < 25; ++t) {
        auto a = testkit::rand_matrix<agre>(3, 2, [&] { return testkit::rand_abelian_element(g, r); });
        auto b = testkit::rand_matrix<agre>(3, 2, [&] { return testkit::rand_abelian_element(g, r); });
        CHECK(rank_gamma(g, hstack(a, b)).value >= rank_gamma(g, a).value);
    }
}

TEST_CASE("additivity on block triangular presentations") {
    free_abelian_group z(1);
    const agre zm1 = agre::of(z, {1}) - agre::one(z);

    CHECK(additivity_check(z, abelian_1x1(z, zm1), abelian_1x1(z, zm1)));
    // two free modules of rank 1
    CHECK(additivity_check(z, matrix<agre>(1, 0), matrix<agre>(1, 0)));

    testkit::rng r(71);
    free_abelian_group g(2);
    for (int t = 0; t < 25; ++t) {
        auto sub = testkit::rand_matrix<agre>(2, 2, [&] { return testkit::rand_abelian_element(g, r); });
        auto quot = testkit::rand_matrix<agre>(2, 2, [&] { return testkit::rand_abelian_element(g, r); });
        auto lift =
            testkit::rand_matrix<agre>(2, 2, [&] { return testkit::rand_abelian_element(g, r); });
        CHECK(additivity_check(g, sub, quot, lift));
    }
}

TEST_CASE("induction compatibility along the dihedral pair") {
    // Modules over C[Z] induced up to the infinite dihedral crossed product
    // keep their dimension.
    const dihedral_t d = dihedral_infinite();
    const free_abelian_group& z = d.base();
    testkit::rng r(73);
    for (int t = 0; t < 20; ++t) {
        const auto rows = static_cast<std::size_t>(r.uniform(1, 2));
        const auto cols = static_cast<std::size_t>(r.uniform(0, 3));
        auto a = testkit::rand_matrix<agre>(rows, cols,
                                            [&] { return testkit::rand_abelian_element(z, r); });
        const rational over_base = dim_fp(make_module(z, a)).value;
        const rational induced = dim_fp(make_module(d, induce_matrix(d, a))).value;
        CHECK(induced == over_base);
    }
}

TEST_CASE("finite backend agrees with idempotent dimensions") {
    // For p an exact idempotent, the module presented by (1 - p) is the
    // image of p, so dim_fp must match the trace sum.
    finite_group z2 = finite_group::cyclic(2);
    const cgre p2 = (cgre::one(z2) + cgre::of(z2, 1)) * gaussian_rational(rational(1, 2));
    matrix<cgre> mp(1, 1);
    mp(0, 0) = p2;
    matrix<cgre> rel(1, 1);
    rel(0, 0) = cgre::one(z2) - p2;
    CHECK(dim_from_idempotent(mp) == dim_fp(make_module(z2, rel)).value);

    finite_group z3 = finite_group::cyclic(3);
    cgre p3(z3);
    for (finite_group::element e = 0; e < 3; ++e) p3 += cgre::of(z3, e);
    p3 = p3 * gaussian_rational(rational(1, 3));
    matrix<cgre> mp3(1, 1);
    mp3(0, 0) = p3;
    matrix<cgre> rel3(1, 1);
    rel3(0, 0) = cgre::one(z3) - p3;
    CHECK(dim_from_idempotent(mp3) == rational(1, 3));
    CHECK(dim_fp(make_module(z3, rel3)).value == rational(1, 3));
}

TEST_CASE("unsupported groups raise") {
    // A rank query over a Z-crossed product has no backend.
    free_abelian_group base(1);
    const cyclic_crossed_product<free_abelian_group> klein(
        base, free_abelian_group::automorphism(base, {{-1}}));
    (void)klein;
    // no rank_gamma overload exists for cyclic crossed products by design;
    // the unsupported-group error surfaces through the regular
    // representation path instead.
    CHECK_THROWS_AS(regular_representation(dce()), unsupported_group);
}
