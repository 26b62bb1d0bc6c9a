#include "doctest.h"

#include "zqcode/hensel.hpp"

using namespace zqcode;

TEST_CASE("pair refinement recovers an exact factor pair") {
    Poly F = Poly::x_pow_minus_one(2, 6, 15);
    Poly g0 = Poly::from_ints(2, 1, {1, 1});             /* X + 1 */
    Poly h0, rest = Poly::from_ints(2, 1, {1});
    /* cofactor mod 2: (X^15 - 1)/(X - 1) = 1 + X + ... + X^14 */
    std::vector<long> ones(15, 1);
    h0 = Poly::from_ints(2, 1, ones);
    auto [g, h] = hensel_pair(F, g0, h0);
    CHECK(g * h == F);
    CHECK(g.reduced(1) == g0);
    CHECK(h.reduced(1) == h0);
    CHECK(g == Poly::from_ints(2, 6, {-1, 1}));
    (void)rest;
}

TEST_CASE("pair refinement rejects seeds sharing a factor") {
    Poly F = Poly::from_ints(2, 3, {1, 2, 1}); /* (X+1)^2 */
    Poly s = Poly::from_ints(2, 1, {1, 1});
    CHECK_THROWS_AS(hensel_pair(F, s, s), domain_error);
}

TEST_CASE("lifting the length-7 factorization through the precision tower") {
    auto base = factor_cyclotomic(7, 2);
    auto l2 = lift_factorization(base, 2);
    auto l3 = lift_factorization(base, 3);
    auto l5 = lift_factorization(base, 5);

    CHECK(l2.factors[0] == Poly::parse(2, 2, "-1,1"));
    CHECK(l2.factors[1] == Poly::parse(2, 2, "-1,1,2,1"));
    CHECK(l2.factors[2] == Poly::parse(2, 2, "-1,2,-1,1"));
    CHECK(l3.factors[1] == Poly::parse(2, 3, "-1,-3,-2,1"));
    CHECK(l5.factors[1] == Poly::parse(2, 5, "-1,5,6,1"));
    CHECK(l5.factors[1].to_string() == "-1,5,6,1");

    /* lifts are compatible under reduction: one canonical tower */
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(l5.factors[i].reduced(3) == l3.factors[i]);
        CHECK(l3.factors[i].reduced(2) == l2.factors[i]);
        CHECK(l2.factors[i].reduced(1) == base.factors[i]);
    }

    /* reciprocal pairing survives lifting */
    CHECK(l5.factors[1].reciprocal() == l5.factors[2]);

    /* the product is exactly X^7 - 1 at precision 5 */
    Poly prod = l5.factors[0] * l5.factors[1] * l5.factors[2];
    CHECK(prod == Poly::x_pow_minus_one(2, 5, 7));
}

TEST_CASE("root-power steps lift one digit at a time (base 2)") {
    auto base = factor_cyclotomic(7, 2);
    auto l5 = lift_factorization(base, 5);
    for (std::size_t i = 0; i < 3; ++i) {
        Poly alt = lift_factor_pth_power(base.factors[i], 5);
        CHECK(alt == l5.factors[i]);
    }
    /* one step applied to the exact factor is a fixed point: squaring
       permutes each factor's roots within its own coset */
    CHECK(pth_power_roots_step(l5.factors[1]) == l5.factors[1]);
}

TEST_CASE("root-power steps lift one digit at a time (base 3)") {
    auto base = factor_cyclotomic(11, 3);
    auto l4 = lift_factorization(base, 4);
    for (std::size_t i = 0; i < 3; ++i) {
        Poly alt = lift_factor_pth_power(base.factors[i], 4);
        CHECK(alt == l4.factors[i]);
    }
    CHECK(pth_power_roots_step(l4.factors[1]) == l4.factors[1]);
    CHECK(pth_power_roots_step(Poly::parse(3, 4, "-1,1")) ==
          Poly::parse(3, 4, "-1,1"));
}

TEST_CASE("lifting the Golay-length factorization over Z/2^12") {
    auto lf = lift_cyclotomic(23, 2, 12);
    REQUIRE(lf.factors.size() == 3);
    CHECK(lf.factors[1].degree() == 11);
    Poly prod = lf.factors[0] * lf.factors[1] * lf.factors[2];
    CHECK(prod == Poly::x_pow_minus_one(2, 12, 23));
    CHECK(lf.factors[1].reciprocal() == lf.factors[2]);
    CHECK(lf.factors[1].reduced(1) ==
          Poly::from_ints(2, 1, {1, 1, 0, 0, 0, 1, 1, 1, 0, 1, 0, 1}));
    /* cross-method agreement at a precision where digits accumulate */
    CHECK(lift_factor_pth_power(lf.base.factors[1], 12) == lf.factors[1]);
}

TEST_CASE("length-31 lift splits into seven quintic-or-linear factors") {
    auto lf = lift_cyclotomic(31, 2, 6);
    REQUIRE(lf.factors.size() == 7);
    Poly prod = Poly::constant(2, 6, 1);
    for (const auto& f : lf.factors) prod = prod * f;
    CHECK(prod == Poly::x_pow_minus_one(2, 6, 31));
    for (std::size_t i = 1; i < 7; ++i) CHECK(lf.factors[i].degree() == 5);
}
