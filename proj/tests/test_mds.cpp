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

#include "zqcode/mds.hpp"

#include <random>

#include "doctest.h"
#include "zqcode/errors.hpp"

using namespace zqcode;

namespace {

QuadInt qi(long x, long y = 0) { return QuadInt(2, mpz_class(x), mpz_class(y)); }

/// Cofactor-expansion determinant, used as an independent reference.
QuadInt naive_det(const QuadMatrix& m) {
    const std::size_t n = m.rows;
    if (n == 0)
        return QuadInt::integer(m.c, 1);
    if (n == 1)
        return m.at(0, 0);
    QuadInt det = QuadInt(m.c, 0, 0);
    for (std::size_t j = 0; j < n; ++j) {
        QuadMatrix sub = QuadMatrix::zero(m.c, n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j)
                    sub.at(r - 1, cc++) = m.at(r, c);
        }
        const QuadInt term = m.at(0, j) * naive_det(sub);
        det = (j % 2 == 0) ? det + term : det - term;
    }
    return det;
}

} // namespace

TEST_CASE("binomial coefficients") {
    CHECK(binomial(8, 4) == 70);
    CHECK(binomial(12, 6) == 924);
    CHECK(binomial(24, 12) == 2704156);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(7, 0) == 1);
}

TEST_CASE("exact determinants in the quadratic ring") {
    QuadMatrix m = QuadMatrix::zero(2, 2, 2);
    m.at(0, 0) = qi(1);
    m.at(0, 1) = qi(2);
    m.at(1, 0) = qi(3);
    m.at(1, 1) = qi(4);
    CHECK(quad_det(m) == qi(-2));

    QuadMatrix w = QuadMatrix::zero(2, 2, 2);
    w.at(0, 0) = QuadInt::omega(2);
    w.at(0, 1) = qi(1);
    w.at(1, 0) = qi(1);
    w.at(1, 1) = QuadInt::omega(2);
    /* w^2 - 1 = (w - 2) - 1 = w - 3 */
    CHECK(quad_det(w) == qi(-3, 1));

    QuadMatrix s = QuadMatrix::zero(2, 2, 2);
    s.at(0, 0) = qi(1);
    s.at(0, 1) = qi(2);
    s.at(1, 0) = qi(2);
    s.at(1, 1) = qi(4);
    CHECK(quad_det(s).is_zero());

    /* pivoting path: zero in the corner */
    QuadMatrix z = QuadMatrix::zero(2, 2, 2);
    z.at(0, 1) = qi(1);
    z.at(1, 0) = qi(1);
    CHECK(quad_det(z) == qi(-1));

    CHECK(quad_det(QuadMatrix::zero(2, 0, 0)) == qi(1));
}

TEST_CASE("fraction-free elimination matches cofactor expansion") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 2 + trial % 4;
        QuadMatrix m = QuadMatrix::zero(2, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m.at(i, j) = qi(static_cast<long>(rng() % 11) - 5,
                                static_cast<long>(rng() % 5) - 2);
        CHECK(quad_det(m) == naive_det(m));
    }
}

TEST_CASE("minor scans over column subsets") {
    /* rows (1,1,1,1) and (0,1,2,3): every 2x2 minor is a nonzero difference */
    QuadMatrix good = QuadMatrix::zero(2, 2, 4);
    for (std::size_t j = 0; j < 4; ++j) {
        good.at(0, j) = qi(1);
        good.at(1, j) = qi(static_cast<long>(j));
    }
    const MinorScan full = scan_minors(good);
    CHECK(full.all_nonzero);
    CHECK(full.total == 6);
    CHECK(full.checked == 6);

    const MinorScan sampled = scan_minors_sampled(good, 10, 42);
    CHECK(sampled.all_nonzero);
    CHECK(sampled.checked == 10);
    /* determinism */
    const MinorScan again = scan_minors_sampled(good, 10, 42);
    CHECK(again.checked == sampled.checked);

    /* duplicate a column: exactly the subsets containing both vanish */
    QuadMatrix bad = good;
    bad.at(0, 3) = bad.at(0, 0);
    bad.at(1, 3) = bad.at(1, 0);
    const MinorScan found = scan_minors(bad);
    CHECK_FALSE(found.all_nonzero);
    REQUIRE(found.witness.size() == 2);
    CHECK(found.witness[0] == 0);
    CHECK(found.witness[1] == 3);
}

TEST_CASE("valuation of determinants known modulo p^prec") {
    using M = std::vector<std::vector<mpz_class>>;
    CHECK(minor_valuation(2, 8, M{{1, 0, 0}, {0, 2, 0}, {0, 0, 4}}) == 3);
    CHECK(minor_valuation(2, 8, M{{2, 0}, {0, 2}}) == 2);
    CHECK(minor_valuation(2, 8, M{{0, 0}, {0, 0}}) == 8);
    CHECK(minor_valuation(2, 8, M{{1, 1}, {1, 1}}) == 8);
    CHECK(minor_valuation(2, 4, M{{1, 1}, {1, 3}}) == 1);
    /* needs the min-valuation pivot in the first column */
    CHECK(minor_valuation(2, 8, M{{2, 1}, {1, 0}}) == 0);
    CHECK(minor_valuation(3, 5, M{{3, 1}, {0, 3}}) == 2);
    CHECK(minor_valuation(2, 6, M{}) == 0);
}
