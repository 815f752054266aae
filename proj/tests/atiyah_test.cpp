#include <catch2/catch_amalgamated.hpp>

#include <l2lab/atiyah.hpp>

#include "support.hpp"

using namespace l2lab;

namespace {
using agre = group_ring_element<free_abelian_group>;
using fgre = group_ring_element<free_group>;
using cgre = group_ring_element<finite_group>;
using dihedral_t = crossed_product<free_abelian_group>;
using dce = crossed_element<dihedral_t>;
} // namespace

TEST_CASE("integrality over the torsion free families") {
    free_abelian_group g(2);
    testkit::rng r(3);
    for (int t = 0; t < 20; ++t) {
        auto m = testkit::rand_matrix<agre>(static_cast<std::size_t>(r.uniform(1, 3)),
                                            static_cast<std::size_t>(r.uniform(0, 3)),
                                            [&] { return testkit::rand_abelian_element(g, r); });
        const integrality_verdict v = atiyah_check(make_module(g, m));
        CHECK(v.lcm_orders == 1);
        CHECK(v.pass);
        CHECK(v.certified);
        CHECK(is_integer(v.dim.value));
    }

    free_group f2(2);
    matrix<fgre> row(1, 2);
    row(0, 0) = fgre::of(f2, f2.generator(0)) - fgre::one(f2);
    row(0, 1) = fgre::of(f2, f2.generator(1)) - fgre::one(f2);
    const integrality_verdict v = atiyah_check(make_module(f2, row));
    CHECK(v.dim.value == 0);
    CHECK(v.pass);
    CHECK(v.certified); // forced rank
}

TEST_CASE("integrality with torsion") {
    finite_group z2 = finite_group::cyclic(2);
    matrix<cgre> m(1, 1);
    m(0, 0) = cgre::one(z2) + cgre::of(z2, 1);
    const integrality_verdict v = atiyah_check(make_module(z2, m));
    CHECK(v.dim.value == rational(1, 2));
    CHECK(v.lcm_orders == 2);
    CHECK(v.pass);

    const dihedral_t d = dihedral_infinite();
    matrix<dce> md(1, 1);
    md(0, 0) = dce::section(d, 1) - dce::one(d);
    const integrality_verdict vd = atiyah_check(make_module(d, md));
    CHECK(vd.dim.value == rational(1, 2));
    CHECK(vd.lcm_orders == 2);
    CHECK(vd.pass);
    CHECK(vd.certified);
}

TEST_CASE("verdicts are deterministic given the seed") {
    free_group f2(2);
    const fgre x1 = fgre::of(f2, f2.generator(0)) - fgre::one(f2);
    matrix<fgre> stuck(2, 2);
    stuck(0, 0) = x1;
    stuck(0, 1) = fgre::one(f2);
    stuck(1, 0) = fgre::one(f2);
    stuck(1, 1) = fgre::of(f2, f2.generator(1)) - fgre::one(f2);
    oracle_config cfg;
    cfg.seed = 99;
    const auto a = atiyah_check(make_module(f2, stuck), cfg);
    const auto b = atiyah_check(make_module(f2, stuck), cfg);
    CHECK(a.dim.value == b.dim.value);
    CHECK_FALSE(a.certified); // sampled, not certified
}

TEST_CASE("rank function report") {
    free_abelian_group g(2);
    testkit::rng r(5);
    std::vector<presented_module<free_abelian_group>> samples;
    samples.push_back(free_module(g, 1));
    // zero module: relations = identity
    matrix<agre> id = matrix<agre>::identity(2, agre::one(g));
    samples.push_back(make_module(g, id));
    for (int t = 0; t < 6; ++t) {
        samples.push_back(make_module(
            g, testkit::rand_matrix<agre>(2, 2, [&] { return testkit::rand_abelian_element(g, r); })));
    }
    const rank_function_report rep = check_rank_function(g, samples);
    CHECK(rep.normalization);
    CHECK(rep.nonnegative);
    CHECK(rep.additive);
    CHECK(rep.pass());

    CHECK(dim_fp(samples[1]).value == 0); // the zero module has rank 0
}
