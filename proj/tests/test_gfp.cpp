#include "doctest.h"

#include "zqcode/gfp.hpp"

#include <algorithm>
#include <set>

using namespace zqcode;

TEST_CASE("multiplicative orders") {
    CHECK(multiplicative_order(2, 7) == 3);
    CHECK(multiplicative_order(3, 11) == 5);
    CHECK(multiplicative_order(2, 23) == 11);
    CHECK(multiplicative_order(2, 31) == 5);
    CHECK(multiplicative_order(2, 1) == 1);
    CHECK_THROWS_AS(multiplicative_order(2, 4), domain_error);
}

TEST_CASE("multiplication orbits partition Z/n") {
    auto cs = cyclotomic_cosets(7, 2);
    REQUIRE(cs.size() == 3);
    CHECK(cs[0] == std::vector<std::uint32_t>{0});
    CHECK(cs[1] == std::vector<std::uint32_t>{1, 2, 4});
    CHECK(cs[2] == std::vector<std::uint32_t>{3, 5, 6});

    auto c31 = cyclotomic_cosets(31, 2);
    REQUIRE(c31.size() == 7);
    std::vector<std::uint32_t> leaders;
    std::size_t total = 0;
    for (const auto& c : c31) {
        leaders.push_back(c.front());
        total += c.size();
    }
    CHECK(leaders == std::vector<std::uint32_t>{0, 1, 3, 5, 7, 11, 15});
    CHECK(total == 31);

    CHECK_THROWS_AS(cyclotomic_cosets(6, 2), domain_error); /* gcd != 1 */
}

TEST_CASE("canonical primitive field modulus is the smallest by digit code") {
    CHECK(Gfpm(2, 3).modulus_poly() == Poly::from_ints(2, 1, {1, 1, 0, 1}));
    CHECK(Gfpm(2, 11).modulus_poly() ==
          Poly::from_ints(2, 1, {1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}));
    CHECK(Gfpm(3, 5).modulus_poly() == Poly::from_ints(3, 1, {1, 2, 0, 0, 0, 1}));
    CHECK(Gfpm(2, 4).modulus_poly() == Poly::from_ints(2, 1, {1, 1, 0, 0, 1}));
    CHECK(Gfpm(3, 2).modulus_poly() == Poly::from_ints(3, 1, {2, 1, 1}));
}

TEST_CASE("field arithmetic: orders and inverses in GF(8)") {
    Gfpm f(2, 3);
    auto g = f.generator();
    /* the defining class has full order 7 because the modulus is primitive */
    auto x = g;
    int order = 1;
    while (!(x == f.one())) {
        x = f.mul(x, g);
        ++order;
        REQUIRE(order <= 8);
    }
    CHECK(order == 7);
    /* every nonzero element is invertible */
    for (std::uint32_t code = 1; code < 8; ++code) {
        Gfpm::Elem e{code & 1, (code >> 1) & 1, (code >> 2) & 1};
        CHECK(f.mul(e, f.inverse(e)) == f.one());
    }
    CHECK_THROWS_AS(f.inverse(f.zero()), domain_error);
}

TEST_CASE("factoring X^7 - 1 over GF(2)") {
    auto fact = factor_cyclotomic(7, 2);
    CHECK(fact.m == 3);
    REQUIRE(fact.factors.size() == 3);
    CHECK(fact.factors[0] == Poly::from_ints(2, 1, {1, 1}));
    CHECK(fact.factors[1] == Poly::from_ints(2, 1, {1, 1, 0, 1}));
    CHECK(fact.factors[2] == Poly::from_ints(2, 1, {1, 0, 1, 1}));
    CHECK(fact.coset_index(1) == 1);
    CHECK(fact.coset_index(6) == 2);
    CHECK(fact.coset_index(8) == 1); /* reduced mod n */
    /* inversion swaps the two cubic cosets and fixes {0} */
    CHECK(fact.reciprocal_index(0) == 0);
    CHECK(fact.reciprocal_index(1) == 2);
    CHECK(fact.reciprocal_index(2) == 1);
    /* and the cubics are each other's reciprocals as polynomials */
    CHECK(fact.factors[1].reciprocal() == fact.factors[2]);
}

TEST_CASE("factoring X^23 - 1 over GF(2) yields the classic dodecad pair") {
    auto fact = factor_cyclotomic(23, 2);
    CHECK(fact.m == 11);
    REQUIRE(fact.factors.size() == 3);
    CHECK(fact.factors[0] == Poly::from_ints(2, 1, {1, 1}));
    CHECK(fact.factors[1] ==
          Poly::from_ints(2, 1, {1, 1, 0, 0, 0, 1, 1, 1, 0, 1, 0, 1}));
    CHECK(fact.factors[2] ==
          Poly::from_ints(2, 1, {1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1}));
    /* the coset of 1 is exactly the set of quadratic residues mod 23 */
    std::set<std::uint32_t> qr;
    for (std::uint32_t x = 1; x < 23; ++x) qr.insert(x * x % 23);
    std::set<std::uint32_t> coset1(fact.cosets[1].begin(), fact.cosets[1].end());
    CHECK(coset1 == qr);
    CHECK(fact.reciprocal_index(1) == 2);
}

TEST_CASE("factoring X^11 - 1 over GF(3) yields the classic ternary pair") {
    auto fact = factor_cyclotomic(11, 3);
    CHECK(fact.m == 5);
    REQUIRE(fact.factors.size() == 3);
    CHECK(fact.factors[0] == Poly::from_ints(3, 1, {2, 1}));
    CHECK(fact.factors[1] == Poly::from_ints(3, 1, {2, 0, 1, 2, 1, 1}));
    CHECK(fact.factors[2] == Poly::from_ints(3, 1, {2, 2, 1, 2, 0, 1}));
    CHECK(fact.cosets[1] == std::vector<std::uint32_t>{1, 3, 4, 5, 9});
    CHECK(fact.reciprocal_index(1) == 2);
}

TEST_CASE("factoring X^31 - 1 over GF(2): three residue and three non-residue cosets") {
    auto fact = factor_cyclotomic(31, 2);
    REQUIRE(fact.factors.size() == 7);
    CHECK(fact.factors[1] == Poly::from_ints(2, 1, {1, 0, 1, 0, 0, 1}));
    for (std::size_t i = 1; i < 7; ++i) CHECK(fact.factors[i].degree() == 5);
    /* quadratic residues mod 31 */
    std::set<std::uint32_t> qr;
    for (std::uint32_t x = 1; x < 31; ++x) qr.insert(x * x % 31);
    std::vector<std::size_t> residue_cosets, nonresidue_cosets;
    for (std::size_t i = 1; i < fact.cosets.size(); ++i) {
        if (qr.count(fact.cosets[i].front()))
            residue_cosets.push_back(i);
        else
            nonresidue_cosets.push_back(i);
    }
    CHECK(residue_cosets == std::vector<std::size_t>{1, 3, 4});
    CHECK(nonresidue_cosets == std::vector<std::size_t>{2, 5, 6});
    /* -1 is a non-residue mod 31, so reciprocation swaps the two classes */
    for (std::size_t i : residue_cosets)
        CHECK(std::count(nonresidue_cosets.begin(), nonresidue_cosets.end(),
                         fact.reciprocal_index(i)) == 1);
}

TEST_CASE("irreducibility test over the residue field") {
    CHECK(is_irreducible_mod_p(Poly::from_ints(2, 1, {1, 1, 0, 1})));
    CHECK(is_irreducible_mod_p(Poly::from_ints(2, 3, {7, 1, 2, 1}))); /* reduces to X^3+X+1 */
    CHECK_FALSE(is_irreducible_mod_p(Poly::from_ints(2, 1, {1, 0, 1}))); /* (X+1)^2 */
    CHECK_FALSE(is_irreducible_mod_p(Poly::from_ints(2, 1, {1})));
    CHECK(is_irreducible_mod_p(Poly::from_ints(3, 1, {1, 0, 1}))); /* X^2+1 mod 3 */
}
