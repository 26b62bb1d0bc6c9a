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

#include "zqcode/kernels.hpp"

#include <numeric>

#include "doctest.h"
#include "zqcode/errors.hpp"

using namespace zqcode;

namespace {

ContextPtr ctx7() {
    static ContextPtr c = make_context(7, 2, 2);
    return c;
}

std::uint64_t hist_sum(const std::vector<std::uint64_t>& h) {
    return std::accumulate(h.begin(), h.end(), std::uint64_t(0));
}

std::uint64_t first_nonzero_index(const std::vector<std::uint64_t>& h) {
    for (std::size_t w = 1; w < h.size(); ++w)
        if (h[w] != 0)
            return w;
    return 0;
}

} // namespace

TEST_CASE("packing sorts staircase rows by start coordinate") {
    const auto code = CyclicCode::from_exponents(ctx7(), {1, 2, 0});
    const EnumMatrix m = pack_code(code);
    REQUIRE(m.rows.size() == 4);
    CHECK(m.q == 4);
    CHECK(m.length == 7);
    for (std::size_t t = 0; t + 1 < m.rows.size(); ++t)
        CHECK(m.start[t] <= m.start[t + 1]);
    CHECK(m.word_count() == 128);
}

TEST_CASE("free rank-4 code: distances and distribution") {
    const auto code = CyclicCode::from_exponents(ctx7(), {0, 2, 0});
    const EnumMatrix m = pack_code(code);
    CHECK(m.word_count() == 256);

    const EnumOptions opts;
    CHECK(min_weight_serial(m, Metric::hamming, opts).weight == 3);
    CHECK(min_weight_serial(m, Metric::lee, opts).weight == 4);
    CHECK(min_weight(m, Metric::hamming, opts).weight == 3);
    CHECK(min_weight(m, Metric::lee, opts).weight == 4);

    const auto hist = weight_distribution_serial(m, Metric::lee, opts);
    CHECK(hist_sum(hist) == 256);
    CHECK(hist[0] == 1);
    CHECK(first_nonzero_index(hist) == 4);
    CHECK(weight_distribution(m, Metric::lee, opts) == hist);

    const auto hh = weight_distribution_serial(m, Metric::hamming, opts);
    CHECK(hist_sum(hh) == 256);
    CHECK(first_nonzero_index(hh) == 3);
}

TEST_CASE("rank-1 scaled code has two words") {
    const auto code = CyclicCode::from_exponents(ctx7(), {1, 2, 2});
    const EnumMatrix m = pack_code(code);
    CHECK(m.word_count() == 2);
    /* the only nonzero word is 2 * (1 + X + ... + X^6): every digit 2 */
    CHECK(min_weight_serial(m, Metric::lee, {}).weight == 14);
    CHECK(min_weight_serial(m, Metric::hamming, {}).weight == 7);
    const auto hist = weight_distribution_serial(m, Metric::lee, {});
    CHECK(hist[0] == 1);
    CHECK(hist[14] == 1);
    CHECK(hist_sum(hist) == 2);
}

TEST_CASE("full ring and zero code edge cases") {
    const auto full = CyclicCode::from_exponents(ctx7(), {0, 0, 0});
    const EnumMatrix m = pack_code(full);
    CHECK(m.word_count() == std::uint64_t(1) << 14);
    CHECK(min_weight_serial(m, Metric::lee, {}).weight == 1);
    CHECK(min_weight(m, Metric::hamming, {}).weight == 1);

    const auto zero = CyclicCode::from_exponents(ctx7(), {2, 2, 2});
    const EnumMatrix z = pack_code(zero);
    CHECK(z.word_count() == 1);
    CHECK_THROWS_AS(min_weight_serial(z, Metric::lee, {}), domain_error);
}

TEST_CASE("distribution respects the word budget") {
    const auto full = CyclicCode::from_exponents(ctx7(), {0, 0, 0});
    const EnumMatrix m = pack_code(full);
    EnumOptions tight;
    tight.budget = 100;
    bool threw = false;
    try {
        weight_distribution_serial(m, Metric::lee, tight);
    } catch (const domain_error& e) {
        threw = e.code() == errc::budget_exceeded;
    }
    CHECK(threw);
}

TEST_CASE("extended code: the self-dual length-8 code reaches Lee distance 6") {
    const auto base = CyclicCode::from_exponents(ctx7(), {0, 2, 0});
    const auto ext = ExtendedCode::zero_sum(base);
    const EnumMatrix m = pack_extended(ext);
    CHECK(m.length == 8);
    CHECK(m.word_count() == 256);
    CHECK(min_weight_serial(m, Metric::hamming, {}).weight == 4);
    CHECK(min_weight_serial(m, Metric::lee, {}).weight == 6);
    CHECK(min_weight(m, Metric::lee, {}).weight == 6);
    const auto hist = weight_distribution(m, Metric::lee, {});
    CHECK(hist_sum(hist) == 256);
    CHECK(first_nonzero_index(hist) == 6);
}

TEST_CASE("serial and parallel scans agree across the census") {
    const EnumOptions opts;
    for (std::uint32_t e0 = 0; e0 <= 2; ++e0)
        for (std::uint32_t e1 = 0; e1 <= 2; ++e1)
            for (std::uint32_t e2 = 0; e2 <= 2; ++e2) {
                if (e0 == 2 && e1 == 2 && e2 == 2)
                    continue;
                const auto code = CyclicCode::from_exponents(ctx7(), {e0, e1, e2});
                const EnumMatrix m = pack_code(code);
                for (Metric metric : {Metric::hamming, Metric::lee}) {
                    CHECK(min_weight_serial(m, metric, opts).weight ==
                          min_weight(m, metric, opts).weight);
                    CHECK(weight_distribution_serial(m, metric, opts) ==
                          weight_distribution(m, metric, opts));
                }
            }
}
