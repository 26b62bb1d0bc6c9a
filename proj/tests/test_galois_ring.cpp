#include "doctest.h"

#include "zqcode/galois_ring.hpp"

#include <set>
#include <string>

using namespace zqcode;

TEST_CASE("canonical construction picks the primitive modulus") {
    GaloisRing r(2, 2, 3); /* 16-element coefficient... 64-element ring GR(4,3) */
    CHECK(r.modulus() == Poly::parse(2, 2, "-1,1,2,1"));
    GaloisRing r3(2, 3, 3);
    CHECK(r3.modulus() == Poly::parse(2, 3, "-1,-3,-2,1"));
    GaloisRing z(3, 5, 1); /* GR(3^5, 1) = Z/3^5; the root is the order-2 unit */
    CHECK(z.modulus().degree() == 1);
    CHECK(z.mul(z.root(), z.root()) == z.one());
}

TEST_CASE("explicit modulus construction validates its input") {
    CHECK_NOTHROW(GaloisRing(Poly::parse(2, 3, "-1,-3,-2,1")));
    CHECK_THROWS_AS(GaloisRing(Poly::from_ints(2, 2, {1, 0, 1})), domain_error);
    CHECK_THROWS_AS(GaloisRing(Poly::from_ints(2, 2, {1, 2})), domain_error);
}

TEST_CASE("unit structure and valuations") {
    GaloisRing r(2, 3, 2); /* GR(8, 2) */
    Poly x = r.from_poly(Poly::from_ints(2, 3, {1, 2}));
    CHECK(r.is_unit(x));
    CHECK(r.valuation(x) == 0);
    Poly y = x.scaled(2);
    CHECK_FALSE(r.is_unit(y));
    CHECK(r.valuation(y) == 1);
    CHECK(r.valuation(r.zero()) == 3);
    CHECK(r.mul(x, r.inverse(x)) == r.one());
    CHECK_THROWS_AS(r.inverse(y), domain_error);
}

TEST_CASE("the multiplicative section of reduction mod p") {
    GaloisRing r(2, 2, 3);
    auto ts = r.teichmuller_set();
    REQUIRE(ts.size() == 8);
    /* distinct, each a fixed point of the 8th-power map, one per residue */
    std::set<std::string> reps, residues;
    for (const auto& t : ts) {
        CHECK(r.pow(t, 8) == t);
        reps.insert(t.to_string());
        residues.insert(t.reduced(1).to_string());
    }
    CHECK(reps.size() == 8);
    CHECK(residues.size() == 8);
    /* projection returns the section member with the same residue */
    for (const auto& t : ts) {
        CHECK(r.teichmuller(t) == t);
        Poly shifted = r.add(t, Poly::constant(2, 2, 2)); /* same residue mod 2 */
        CHECK(r.teichmuller(shifted) == t);
    }
}

TEST_CASE("digit expansion with section coefficients") {
    GaloisRing r(2, 3, 3); /* GR(8, 3) */
    Poly u = r.from_poly(Poly::from_ints(2, 3, {5, 3, 6}));
    auto coords = r.padic_coords(u);
    REQUIRE(coords.size() == 3);
    Poly sum = r.zero();
    for (std::size_t k = 0; k < 3; ++k) {
        CHECK(r.pow(coords[k], 8) == coords[k]); /* section members */
        sum = r.add(sum, coords[k].scaled(pow_p(2, static_cast<std::uint32_t>(k))));
    }
    CHECK(sum == u);
    /* the zero element expands to zero digits */
    for (const auto& c : r.padic_coords(r.zero())) CHECK(c.is_zero());
}

TEST_CASE("the ring automorphism of order m") {
    GaloisRing r(2, 3, 3);
    Poly x = r.from_poly(Poly::from_ints(2, 3, {3, 1, 7}));
    Poly y = r.from_poly(Poly::from_ints(2, 3, {2, 0, 5}));
    /* multiplicative and additive */
    CHECK(r.frobenius(r.mul(x, y)) == r.mul(r.frobenius(x), r.frobenius(y)));
    CHECK(r.frobenius(r.add(x, y)) == r.add(r.frobenius(x), r.frobenius(y)));
    /* fixes scalars */
    CHECK(r.frobenius(r.scalar(5)) == r.scalar(5));
    /* order 3 on a generic element */
    Poly f1 = r.frobenius(x), f2 = r.frobenius(f1), f3 = r.frobenius(f2);
    CHECK(f3 == x);
    CHECK(f1 != x);
    /* reduces to squaring mod 2 */
    CHECK(f1.reduced(1) == r.from_poly(x * x).reduced(1));
    /* commutes with the section projection */
    CHECK(r.frobenius(r.teichmuller(x)) == r.teichmuller(r.frobenius(x)));
}

TEST_CASE("base-3 ring: automorphism and digits") {
    GaloisRing r(3, 3, 2); /* GR(27, 2) */
    Poly x = r.from_poly(Poly::from_ints(3, 3, {7, 5}));
    Poly f1 = r.frobenius(x), f2 = r.frobenius(f1);
    CHECK(f2 == x);
    CHECK(f1.reduced(1) == r.from_poly(x * x * x).reduced(1));
    auto coords = r.padic_coords(x);
    Poly sum = r.zero();
    for (std::size_t k = 0; k < coords.size(); ++k)
        sum = r.add(sum, coords[k].scaled(pow_p(3, static_cast<std::uint32_t>(k))));
    CHECK(sum == x);
    CHECK(r.teichmuller_set().size() == 9);
}

TEST_CASE("ring mismatch and unreduced elements are rejected") {
    GaloisRing r(2, 2, 3);
    CHECK_THROWS_AS(r.add(r.one(), Poly::constant(2, 3, 1)), domain_error);
    CHECK_THROWS_AS(r.add(r.one(), Poly::x_pow(2, 2, 3)), domain_error);
    CHECK(r.from_poly(Poly::x_pow(2, 2, 3)).degree() < 3);
}
