/*
   Copyright 2026 The zqcode authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "zqcode/code.hpp"

#include <vector>

#include "doctest.h"
#include "zqcode/errors.hpp"
#include "zqcode/span_set.hpp"

using namespace zqcode;

namespace {

ContextPtr ctx7() {
    static ContextPtr c = make_context(7, 2, 2);
    return c;
}

std::vector<std::uint32_t> exps(std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    return {a, b, c};
}

} // namespace

TEST_CASE("length-7 context over Z4") {
    auto ctx = ctx7();
    REQUIRE(ctx->count() == 3);
    CHECK(ctx->factor(0) == Poly::from_ints(2, 2, {-1, 1}));
    CHECK(ctx->factor(1) == Poly::from_ints(2, 2, {-1, 1, 2, 1}));
    CHECK(ctx->reciprocal_index(0) == 0);
    CHECK(ctx->reciprocal_index(1) == 2);
    CHECK(ctx->reciprocal_index(2) == 1);
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(ctx->factor(i) * ctx->cofactor(i) == ctx->modulus());
}

TEST_CASE("component exponents recovered from generating sets") {
    auto ctx = ctx7();
    const Poly f0 = ctx->factor(0), f1 = ctx->factor(1);
    const Poly two = Poly::constant(2, 2, 2);
    const Poly one = Poly::constant(2, 2, 1);

    CHECK(CyclicCode::from_generators(ctx, {f0 * f1, two * f1}).exponents() ==
          exps(1, 2, 0));
    CHECK(CyclicCode::from_generators(ctx, {two}).exponents() == exps(1, 1, 1));
    CHECK(CyclicCode::from_generators(ctx, {one}).exponents() == exps(0, 0, 0));
    CHECK(CyclicCode::from_generators(ctx, {}).exponents() == exps(2, 2, 2));
    CHECK(CyclicCode::from_generators(ctx, {f1}).exponents() == exps(0, 2, 0));
}

TEST_CASE("chain, type, and ideal of a mixed code") {
    auto ctx = ctx7();
    const auto code = CyclicCode::from_exponents(ctx, exps(1, 2, 0));
    REQUIRE(code.chain().size() == 2);
    CHECK(code.chain()[0].m == 0);
    CHECK(code.chain()[0].f == ctx->factor(0) * ctx->factor(1));
    CHECK(code.chain()[1].m == 1);
    CHECK(code.chain()[1].f == ctx->factor(1));
    CHECK(code.type_string() == "1^3 2^1");
    CHECK(code.ideal_string() == "P_0 P_1^2");
    CHECK(code.size_exponent() == 7);
}

TEST_CASE("the free rank-4 code behind the octacode") {
    auto ctx = ctx7();
    const auto code = CyclicCode::from_exponents(ctx, exps(0, 2, 0));
    CHECK(code.type_string() == "1^4");
    CHECK(code.ideal_string() == "P_1^2");
    CHECK(code.size_exponent() == 8);
    REQUIRE(code.chain().size() == 1);
    CHECK(code.chain()[0].f == ctx->factor(1));
    CHECK(CyclicCode::from_generators(ctx, {code.principal_generator()}) == code);
    /* the idempotent that kills component 1 generates the same ideal */
    const Poly e1 = component_idempotent(*ctx, 1);
    CHECK(CyclicCode::from_generators(ctx, {e1}).exponents() == exps(0, 2, 0));
}

TEST_CASE("principal generator of a two-level chain") {
    auto ctx = ctx7();
    const auto code = CyclicCode::from_exponents(ctx, exps(0, 1, 0));
    CHECK(code.type_string() == "1^4 2^3");
    const Poly expected = ctx->factor(1) + Poly::constant(2, 2, 2);
    CHECK(code.principal_generator() == expected);
    CHECK(CyclicCode::from_generators(ctx, {expected}) == code);
}

TEST_CASE("zero code and full ring") {
    auto ctx = ctx7();
    const auto zero = CyclicCode::from_exponents(ctx, exps(2, 2, 2));
    CHECK(zero.is_zero_code());
    CHECK(zero.type_string() == "1^0");
    CHECK(zero.ideal_string() == "P_0^2 P_1^2 P_2^2");
    CHECK(zero.size_exponent() == 0);

    const auto full = CyclicCode::from_exponents(ctx, exps(0, 0, 0));
    CHECK(full.type_string() == "1^7");
    CHECK(full.ideal_string() == "1");
    CHECK(full.size_exponent() == 14);
    CHECK(full.principal_generator() == Poly::constant(2, 2, 1));

    CHECK(zero.dual() == full);
    CHECK(full.dual() == zero);
}

TEST_CASE("duals pair reciprocal components with complementary exponents") {
    auto ctx = ctx7();
    const auto c11 = CyclicCode::from_exponents(ctx, exps(1, 0, 0));
    CHECK(c11.dual().exponents() == exps(1, 2, 2));
    CHECK(c11.dual().dual() == c11);

    const auto c22 = CyclicCode::from_exponents(ctx, exps(1, 2, 0));
    CHECK(c22.dual() == c22); /* self-dual: 2 - exps o reciprocal = exps */

    for (auto e : {exps(0, 2, 0), exps(1, 1, 1), exps(0, 1, 2)}) {
        const auto c = CyclicCode::from_exponents(ctx, e);
        CHECK(c.size_exponent() + c.dual().size_exponent() == 14);
        CHECK(c.dual().dual() == c);
    }
}

TEST_CASE("membership and staircase coordinates agree with the span") {
    auto ctx = ctx7();
    const auto code = CyclicCode::from_exponents(ctx, exps(1, 2, 0));
    const auto rows = code.generator_rows();
    REQUIRE(rows.size() == 4);

    Poly v = rows[0].scaled(3) + rows[1] + rows[3].scaled(2);
    CHECK(code.contains(v));
    const auto coords = code.staircase_coordinates(v);
    REQUIRE(coords.has_value());
    Poly rebuilt = Poly::constant(2, 2, 0);
    for (std::size_t i = 0; i < rows.size(); ++i)
        rebuilt = rebuilt + rows[i].scaled((*coords)[i]);
    CHECK(rebuilt == v);

    CHECK_FALSE(code.contains(Poly::constant(2, 2, 1)));
    CHECK_FALSE(code.staircase_coordinates(Poly::constant(2, 2, 1)).has_value());

    const SpanSet span(7, 2, 2, {code.principal_generator()});
    CHECK(span.size() == 128); /* 2^size_exponent */
    for (const Poly& r : rows)
        CHECK(span.contains(r));
    CHECK_FALSE(span.contains(Poly::constant(2, 2, 1)));
    const SpanSet span2(7, 2, 2, rows);
    CHECK(span == span2);
}

TEST_CASE("idempotent generators exist exactly for 0/top exponent patterns") {
    auto ctx = ctx7();
    const auto code = CyclicCode::from_exponents(ctx, exps(0, 2, 2));
    const auto e = code.idempotent_generator();
    REQUIRE(e.has_value());
    CHECK(CyclicCode::from_generators(ctx, {*e}) == code);

    CHECK_FALSE(CyclicCode::from_exponents(ctx, exps(0, 1, 0))
                    .idempotent_generator()
                    .has_value());

    /* higher precision exercises the digit-lifting path */
    auto ctx4 = make_context(7, 2, 4);
    const Poly e1 = component_idempotent(*ctx4, 1);
    CHECK(CyclicCode::from_generators(ctx4, {e1}).exponents() ==
          std::vector<std::uint32_t>{0, 4, 0});
}

TEST_CASE("extension modes coincide on the octacode and give a self-dual code") {
    auto ctx = ctx7();
    const auto base = CyclicCode::from_exponents(ctx, exps(0, 2, 0));
    const auto zs = ExtendedCode::zero_sum(base);
    const auto ap = ExtendedCode::append_constant(base, ZqInt(2, 2, 1));
    CHECK(zs.level_digit(0).residue() == 1); /* -f1(1) = -3 = 1 mod 4 */
    CHECK(zs.same_codewords(ap));
    CHECK(zs.is_self_dual());
    CHECK(ap.is_self_dual());

    for (const auto& row : zs.generator_matrix()) {
        CHECK(zs.contains(row));
        auto bad = row;
        bad.back() += 1;
        CHECK_FALSE(zs.contains(bad));
    }
}

TEST_CASE("monomial transforms against known automorphisms") {
    auto ctx = ctx7();
    const auto code = CyclicCode::from_exponents(ctx, exps(0, 2, 0));

    CHECK(preserves(code, Monomial::identity(7)));
    CHECK(preserves(code, Monomial::identity(7).with_cycle({0, 1, 2, 3, 4, 5, 6})));
    CHECK(preserves(code, Monomial::identity(7).with_cycle({1, 2, 4}).with_cycle(
                              {3, 6, 5})));
    CHECK(preserves(code,
                    Monomial::identity(7).with_negations({0, 1, 2, 3, 4, 5, 6})));
    CHECK_FALSE(preserves(code, Monomial::identity(7).with_cycle({0, 1})));

    const auto ext = ExtendedCode::zero_sum(code);
    CHECK(preserves(ext, Monomial::identity(8)));
    CHECK(preserves(ext, Monomial::identity(8).with_cycle({0, 1, 2, 3, 4, 5, 6})));
    CHECK_FALSE(preserves(ext, Monomial::identity(8).with_cycle({0, 7})));
}

TEST_CASE("infinite mode: limit ideals and their duals") {
    auto ctx = ctx7();
    const auto lim = CyclicCode::from_exponents(ctx, exps(0, 2, 0), true);
    CHECK(lim.ideal_string() == "P_1^inf");
    CHECK(lim.dual().exponents() == exps(2, 2, 0));
    CHECK(lim.dual().infinite_mode());

    const auto bad = CyclicCode::from_exponents(ctx, exps(1, 0, 0), true);
    bool threw = false;
    try {
        bad.dual();
    } catch (const domain_error& e) {
        threw = e.code() == errc::infinite_mode_unsupported;
    }
    CHECK(threw);
}
