#include <catch2/catch_amalgamated.hpp>

#include <l2lab/group_ring.hpp>

#include "support.hpp"

using namespace l2lab;

namespace {
using fgre = group_ring_element<free_group>;
using agre = group_ring_element<free_abelian_group>;
using cgre = group_ring_element<finite_group>;
} // namespace

TEST_CASE("trace picks the identity coefficient") {
    free_group g(2);
    const fgre a = fgre::scalar(g, gaussian_rational(2)) + fgre::of(g, g.generator(0), 3) +
                   fgre::of(g, g.inverse(g.generator(0)), gaussian_rational(rational(1, 2)));
    CHECK(trace(a) == gaussian_rational(2));
    CHECK(trace(fgre(g)) == gaussian_rational(0));

    const fgre x = fgre::of(g, g.generator(0));
    const fgre xinv = fgre::of(g, g.inverse(g.generator(0)));
    CHECK(trace(x * xinv) == gaussian_rational(1));
    CHECK(trace(x) == gaussian_rational(0));
}

TEST_CASE("trace property tr(ab) = tr(ba)") {
    free_group g(2);
    const fgre x = fgre::of(g, g.generator(0));
    const fgre xinv = fgre::of(g, g.inverse(g.generator(0)));
    CHECK(trace_property_check(x, xinv));

    finite_group z2 = finite_group::cyclic(2);
    testkit::rng r(3);
    for (int t = 0; t < 50; ++t) {
        CHECK(trace_property_check(testkit::rand_finite_element(z2, r),
                                   testkit::rand_finite_element(z2, r)));
        CHECK(trace_property_check(testkit::rand_free_element(g, r, 3, 3),
                                   testkit::rand_free_element(g, r, 3, 3)));
    }
}

TEST_CASE("group ring axioms on random elements") {
    testkit::rng r(9);
    free_group g(2);
    free_abelian_group za(2);
    for (int t = 0; t < 40; ++t) {
        const fgre a = testkit::rand_free_element(g, r);
        const fgre b = testkit::rand_free_element(g, r);
        const fgre c = testkit::rand_free_element(g, r);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((b + c) * a == b * a + c * a);
        CHECK(a * fgre::one(g) == a);

        const agre p = testkit::rand_abelian_element(za, r);
        const agre q = testkit::rand_abelian_element(za, r);
        CHECK(p * q == q * p);
        CHECK(to_laurent(p * q) == to_laurent(p) * to_laurent(q));
        CHECK(from_laurent(za, to_laurent(p)) == p);
    }
}

TEST_CASE("mismatched group models are rejected") {
    free_group g(2), h(3);
    const fgre a = fgre::of(g, g.generator(0));
    const fgre b = fgre::of(h, h.generator(2));
    CHECK_THROWS_AS(a * b, mismatched_groups);
    CHECK_NOTHROW(a + fgre()); // the group-less zero is compatible with anything
}

TEST_CASE("star involution") {
    testkit::rng r(21);
    free_group g(2);
    for (int t = 0; t < 50; ++t) {
        const fgre a = testkit::rand_free_element(g, r);
        const fgre b = testkit::rand_free_element(g, r);
        CHECK(star(star(a)) == a);
        CHECK(star(a * b) == star(b) * star(a));
        // faithfulness at the group ring level: tr(a* a) is the coefficient
        // norm square
        rational expected(0);
        for (const auto& [w, c] : a.terms()) expected += c.norm2();
        CHECK(trace(star(a) * a) == gaussian_rational(expected));
        if (trace(star(a) * a).is_zero()) CHECK(a.is_zero());
    }
}

TEST_CASE("dimension from idempotents") {
    finite_group z2 = finite_group::cyclic(2);
    const cgre half = (cgre::one(z2) + cgre::of(z2, 1)) * gaussian_rational(rational(1, 2));
    matrix<cgre> p(1, 1);
    p(0, 0) = half;
    CHECK(dim_from_idempotent(p) == rational(1, 2));

    matrix<cgre> id(1, 1);
    id(0, 0) = cgre::one(z2);
    CHECK(dim_from_idempotent(id) == 1);

    CHECK(dim_from_idempotent(matrix<cgre>(1, 1, cgre(z2))) == 0);

    matrix<cgre> bad(1, 1);
    bad(0, 0) = cgre::of(z2, 1); // g is not idempotent
    CHECK_THROWS_AS(dim_from_idempotent(bad), not_idempotent);
    CHECK_THROWS_AS(dim_from_idempotent(matrix<cgre>(1, 2)), non_square);
}

TEST_CASE("idempotent dimension is invariant under conjugation") {
    finite_group z4 = finite_group::cyclic(4);
    // p = (e + g + g^2 + g^3)/4, the rank-1/4 averaging idempotent, blown to 2x2.
    cgre avg(z4);
    for (finite_group::element e = 0; e < 4; ++e) avg += cgre::of(z4, e);
    avg = avg * gaussian_rational(rational(1, 4));
    matrix<cgre> p(2, 2, cgre(z4));
    p(0, 0) = avg;
    const rational base = dim_from_idempotent(p);
    CHECK(base == rational(1, 4));

    testkit::rng r(33);
    for (int t = 0; t < 10; ++t) {
        // u = I + c E_{01} with exact inverse I - c E_{01}
        const cgre c = testkit::rand_finite_element(z4, r);
        matrix<cgre> u = matrix<cgre>::identity(2, cgre::one(z4));
        matrix<cgre> uinv = u;
        u(0, 1) = c;
        uinv(0, 1) = -c;
        CHECK(dim_from_idempotent(u * p * uinv) == base);
    }
}

TEST_CASE("regular representation of finite group rings") {
    finite_group z2 = finite_group::cyclic(2);
    const cgre a = cgre::one(z2) + cgre::of(z2, 1);
    const matrix<gaussian_rational> rho = regular_representation(a);
    REQUIRE(rho.rows() == 2);
    CHECK(rho(0, 0) == gaussian_rational(1));
    CHECK(rho(0, 1) == gaussian_rational(1));
    CHECK(rho(1, 0) == gaussian_rational(1));
    CHECK(rho(1, 1) == gaussian_rational(1));

    CHECK(regular_representation(cgre::one(z2)) ==
          matrix<gaussian_rational>::identity(2, gaussian_rational(1)));

    testkit::rng r(41);
    finite_group z6 = finite_group::cyclic(6);
    for (int t = 0; t < 30; ++t) {
        const cgre x = testkit::rand_finite_element(z6, r);
        const cgre y = testkit::rand_finite_element(z6, r);
        CHECK(regular_representation(x * y) ==
              regular_representation(x) * regular_representation(y));
    }
}
