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

#include "zqcode/census.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>

#include "doctest.h"

using namespace zqcode;

namespace {

ContextPtr ctx7() {
    static ContextPtr c = make_context(7, 2, 2);
    return c;
}

struct Expected {
    std::vector<std::uint32_t> exponents;
    const char* type;
    const char* ideal;
    std::int64_t d_lee;      /* -1: no nonzero word */
    std::int64_t d_star_lee; /* -1: no nonzero word */
};

/* Every displayed row of the classic length-7 table over Z4. */
const std::vector<Expected> kDisplayed{
    {{2, 2, 2}, "1^0", "P_0^2 P_1^2 P_2^2", -1, -1},
    {{1, 2, 2}, "2^1", "P_0 P_1^2 P_2^2", 14, 16},
    {{2, 2, 1}, "2^3", "P_0^2 P_1^2 P_2", 8, 8},
    {{1, 2, 1}, "2^4", "P_0 P_1^2 P_2", 6, 8},
    {{2, 1, 1}, "2^6", "P_0^2 P_1 P_2", 4, 4},
    {{1, 1, 1}, "2^7", "P_0 P_1 P_2", 2, 4},
    {{0, 0, 0}, "1^7", "1", 1, 2},
    {{2, 0, 0}, "1^6", "P_0^2", 2, 2},
    {{1, 0, 0}, "1^6 2^1", "P_0", 2, 2},
    {{0, 2, 0}, "1^4", "P_1^2", 4, 6},
    {{0, 1, 0}, "1^4 2^3", "P_1", 2, 4},
    {{2, 2, 0}, "1^3", "P_0^2 P_1^2", 6, 6},
    {{1, 1, 0}, "1^3 2^4", "P_0 P_1", 2, 4},
    {{2, 1, 0}, "1^3 2^3", "P_0^2 P_1", 4, 4},
    {{1, 2, 0}, "1^3 2^1", "P_0 P_1^2", 4, 6},
    {{0, 2, 2}, "1^1", "P_1^2 P_2^2", 7, 8},
    {{0, 1, 1}, "1^1 2^6", "P_1 P_2", 2, 4},
    {{0, 2, 1}, "1^1 2^3", "P_1^2 P_2", 6, 8},
};

} // namespace

TEST_CASE("the 27 length-7 codes over Z4 are pairwise distinct") {
    const auto codes = all_codes(ctx7());
    REQUIRE(codes.size() == 27);
    for (std::size_t i = 0; i < codes.size(); ++i)
        for (std::size_t j = i + 1; j < codes.size(); ++j)
            CHECK(codes[i] != codes[j]);
}

TEST_CASE("census reports match the frozen table values") {
    const auto reports = census(ctx7(), true);
    REQUIRE(reports.size() == 27);
    std::map<std::vector<std::uint32_t>, const CodeReport*> by_exps;
    for (const auto& r : reports)
        by_exps[r.exponents] = &r;
    REQUIRE(by_exps.size() == 27);

    for (const Expected& e : kDisplayed) {
        const CodeReport& r = *by_exps.at(e.exponents);
        CAPTURE(e.type);
        CHECK(r.type == e.type);
        CHECK(r.ideal == e.ideal);
        if (e.d_lee < 0) {
            CHECK_FALSE(r.d_lee.has_value());
            CHECK_FALSE(r.d_star_lee.has_value());
        } else {
            REQUIRE(r.d_lee.has_value());
            REQUIRE(r.d_star_lee.has_value());
            CHECK(*r.d_lee == static_cast<std::uint64_t>(e.d_lee));
            CHECK(*r.d_star_lee == static_cast<std::uint64_t>(e.d_star_lee));
            CHECK(r.words <= 16384); /* every scan stays within 4^7 words */
        }
    }

    /* the Singleton-bound flags among the free codes */
    CHECK(by_exps.at({0, 0, 0})->mds == std::optional<bool>(true));
    CHECK(by_exps.at({2, 0, 0})->mds == std::optional<bool>(true));
    CHECK(by_exps.at({0, 2, 2})->mds == std::optional<bool>(true));
    CHECK(by_exps.at({0, 2, 0})->mds == std::optional<bool>(false));
    CHECK_FALSE(by_exps.at({2, 2, 2})->mds.has_value());
}

TEST_CASE("swapping the reciprocal cubic components is a coordinate change") {
    auto ctx = ctx7();
    /* source[3j mod 7] = j realizes substituting X^3 for X */
    Monomial sub = Monomial::identity(7);
    for (std::size_t j = 0; j < 7; ++j)
        sub.source[(3 * j) % 7] = j;

    const std::vector<std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>>
        pairs{{{0, 2, 1}, {0, 1, 2}}, {{1, 2, 0}, {1, 0, 2}}, {{2, 1, 0}, {2, 0, 1}}};
    for (const auto& [a, b] : pairs) {
        const auto ca = CyclicCode::from_exponents(ctx, a);
        const auto cb = CyclicCode::from_exponents(ctx, b);
        CHECK(ca.size_exponent() == cb.size_exponent());
        for (const auto& row : ca.generator_matrix())
            CHECK(cb.contains_vector(sub.apply(row, mpz_class(4))));
    }
}

TEST_CASE("rendered census table matches the golden copy") {
    const auto reports = census(ctx7(), true);
    const std::string table = render_census_table(reports);
    CHECK(table.find(" 2 | 2,2,2,2,2,2,2 (2)") != std::string::npos);
    CHECK(table.find("12 | -1,1,2,1 (1)") != std::string::npos);
    CHECK(table.find("14(16)") != std::string::npos);

    std::ifstream golden(ZQCODE_SOURCE_DIR "/tests/golden/table_z4_length7.txt");
    REQUIRE_MESSAGE(golden.is_open(), "golden table file not found");
    std::string expected((std::istreambuf_iterator<char>(golden)),
                         std::istreambuf_iterator<char>());
    CHECK(table == expected);
}

TEST_CASE("chain shapes partition the three-factor census") {
    const auto shapes = three_factor_shapes();
    CHECK(shapes.size() == 24);
    CHECK(std::set<ChainShape>(shapes.begin(), shapes.end()).size() == 24);

    std::size_t zero = 0, constant = 0, patterned = 0;
    for (const auto& code : all_codes(ctx7())) {
        const auto shape = chain_shape(code);
        if (!shape.has_value()) {
            ++zero;
            continue;
        }
        if (*shape == ChainShape{{}}) {
            ++constant;
            continue;
        }
        ++patterned;
        CHECK(std::find(shapes.begin(), shapes.end(), *shape) != shapes.end());
    }
    CHECK(zero == 1);      /* the zero code */
    CHECK(constant == 2);  /* the full ring and its scalar multiple */
    CHECK(patterned == 24);
}
