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

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "zqcode/errors.hpp"

namespace zqcode {

QuadMatrix QuadMatrix::zero(long c, std::size_t rows, std::size_t cols) {
    QuadMatrix m;
    m.c = c;
    m.rows = rows;
    m.cols = cols;
    m.entries.assign(rows * cols, QuadInt(c, 0, 0));
    return m;
}

QuadInt quad_det(QuadMatrix m) {
    require(m.rows == m.cols, "determinant requires a square matrix");
    const std::size_t n = m.rows;
    if (n == 0)
        return QuadInt::integer(m.c, 1);
    int sign = 1;
    QuadInt prev = QuadInt::integer(m.c, 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k).is_zero()) {
            std::size_t r = k + 1;
            while (r < n && m.at(r, k).is_zero())
                ++r;
            if (r == n)
                return QuadInt::integer(m.c, 0);
            for (std::size_t j = k; j < n; ++j)
                std::swap(m.at(k, j), m.at(r, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m.at(i, j) =
                    (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)).divexact(prev);
            m.at(i, k) = QuadInt(m.c, 0, 0);
        }
        prev = m.at(k, k);
    }
    QuadInt det = m.at(n - 1, n - 1);
    return sign < 0 ? -det : det;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    mpz_class r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r *= mpz_class(n - k + i);
        mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(i));
    }
    if (!r.fits_ulong_p())
        return std::numeric_limits<std::uint64_t>::max();
    return r.get_ui();
}

namespace {

/// Pascal triangle cached up to (n, k) for colex subset unranking.
struct Choose {
    std::size_t n, k;
    std::vector<std::uint64_t> t; // (n+1) x (k+1)

    Choose(std::size_t nn, std::size_t kk) : n(nn), k(kk), t((nn + 1) * (kk + 1)) {
        for (std::size_t i = 0; i <= n; ++i)
            for (std::size_t j = 0; j <= k; ++j)
                t[i * (k + 1) + j] = binomial(i, j);
    }
    std::uint64_t operator()(std::size_t nn, std::size_t kk) const {
        return kk > k ? 0 : t[nn * (k + 1) + kk];
    }
};

/// Subset of {0..n-1} with colex rank `rank`: out[i] is the largest c with
/// C(c, i+1) <= remaining rank.
void unrank_colex(const Choose& ch, std::uint64_t rank, std::vector<std::size_t>& out) {
    for (std::size_t i = ch.k; i-- > 0;) {
        std::size_t c = i;
        while (c + 1 < ch.n && ch(c + 1, i + 1) <= rank)
            ++c;
        out[i] = c;
        rank -= ch(c, i + 1);
    }
}

bool minor_is_zero(const QuadMatrix& m, const std::vector<std::size_t>& cols) {
    QuadMatrix sub = QuadMatrix::zero(m.c, m.rows, m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.rows; ++j)
            sub.at(i, j) = m.at(i, cols[j]);
    return quad_det(std::move(sub)).is_zero();
}

} // namespace

MinorScan scan_minors(const QuadMatrix& m, int threads) {
    require(m.rows <= m.cols, "need at least as many columns as rows");
    MinorScan scan;
    scan.total = binomial(m.cols, m.rows);
    const Choose ch(m.cols, m.rows);
    std::atomic<std::uint64_t> checked(0);
    std::atomic<bool> found(false);
    std::vector<std::size_t> witness;

#ifdef _OPENMP
    const int nt = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel num_threads(nt)
#else
    (void)threads;
#endif
    {
        std::vector<std::size_t> cols(m.rows);
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 256)
#endif
        for (std::int64_t rank = 0; rank < static_cast<std::int64_t>(scan.total); ++rank) {
            if (found.load(std::memory_order_relaxed))
                continue;
            unrank_colex(ch, static_cast<std::uint64_t>(rank), cols);
            checked.fetch_add(1, std::memory_order_relaxed);
            if (minor_is_zero(m, cols)) {
                bool expected = false;
                /* exactly one thread wins the exchange and records the witness */
                if (found.compare_exchange_strong(expected, true))
                    witness = cols;
            }
        }
    }

    scan.checked = checked.load();
    scan.all_nonzero = !found.load();
    scan.witness = witness;
    return scan;
}

MinorScan scan_minors_sampled(const QuadMatrix& m, std::uint64_t samples,
                              std::uint64_t seed) {
    require(m.rows <= m.cols, "need at least as many columns as rows");
    MinorScan scan;
    scan.total = binomial(m.cols, m.rows);
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> pool(m.cols);
    std::vector<std::size_t> cols(m.rows);
    for (std::uint64_t s = 0; s < samples; ++s) {
        std::iota(pool.begin(), pool.end(), 0);
        for (std::size_t i = 0; i < m.rows; ++i) {
            const std::size_t j = i + static_cast<std::size_t>(rng() % (m.cols - i));
            std::swap(pool[i], pool[j]);
        }
        std::copy(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(m.rows),
                  cols.begin());
        std::sort(cols.begin(), cols.end());
        ++scan.checked;
        if (minor_is_zero(m, cols)) {
            scan.all_nonzero = false;
            scan.witness = cols;
            return scan;
        }
    }
    return scan;
}

std::uint32_t minor_valuation(std::uint32_t p, std::uint32_t prec,
                              std::vector<std::vector<mpz_class>> m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        require(row.size() == n, "determinant requires a square matrix");
    const mpz_class q = pow_p(p, prec);
    const mpz_class pz = p;
    for (auto& row : m)
        for (auto& e : row)
            e = ((e % q) + q) % q;

    auto val_of = [&](const mpz_class& e) -> std::uint32_t {
        if (e == 0)
            return prec;
        std::uint32_t v = 0;
        mpz_class t = e;
        while (v < prec && mpz_divisible_p(t.get_mpz_t(), pz.get_mpz_t())) {
            mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), pz.get_mpz_t());
            ++v;
        }
        return v;
    };

    std::uint32_t total = 0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t best_row = n;
        std::uint32_t best_val = prec;
        for (std::size_t i = k; i < n; ++i) {
            const std::uint32_t v = val_of(m[i][k]);
            if (v < best_val) {
                best_val = v;
                best_row = i;
            }
        }
        if (best_row == n)
            return prec; // whole column divisible by p^prec
        total += best_val;
        if (total >= prec)
            return prec;
        std::swap(m[k], m[best_row]);

        mpz_class shift = pow_p(p, best_val);
        mpz_class unit;
        mpz_divexact(unit.get_mpz_t(), m[k][k].get_mpz_t(), shift.get_mpz_t());
        mpz_class inv;
        require(mpz_invert(inv.get_mpz_t(), unit.get_mpz_t(), q.get_mpz_t()) != 0,
                "pivot unit part must be invertible");
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m[i][k] == 0)
                continue;
            mpz_class num;
            mpz_divexact(num.get_mpz_t(), m[i][k].get_mpz_t(), shift.get_mpz_t());
            const mpz_class mult = (num * inv) % q;
            for (std::size_t j = k; j < n; ++j)
                m[i][j] = ((m[i][j] - mult * m[k][j]) % q + q) % q;
            require(m[i][k] == 0, "elimination must clear the column");
        }
    }
    return total;
}

} // namespace zqcode
