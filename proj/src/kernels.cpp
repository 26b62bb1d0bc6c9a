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

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "zqcode/errors.hpp"

namespace zqcode {

namespace {

constexpr std::uint64_t kNoWeight = std::numeric_limits<std::uint64_t>::max();

std::uint64_t coord_weight(std::uint64_t v, std::uint64_t q, Metric metric) {
    if (metric == Metric::hamming)
        return v != 0 ? 1 : 0;
    return std::min(v, q - v);
}

EnumMatrix pack_rows(std::uint32_t p, std::uint32_t prec,
                     const std::vector<std::vector<mpz_class>>& rows,
                     const std::vector<std::uint32_t>& level_m,
                     std::size_t length) {
    const mpz_class qz = pow_p(p, prec);
    if (qz >= (std::uint64_t(1) << 31))
        throw domain_error(errc::invalid_argument,
                           "codeword enumeration supports p^prec < 2^31");
    EnumMatrix m;
    m.p = p;
    m.prec = prec;
    m.q = qz.get_ui();
    m.length = length;
    require(rows.size() == level_m.size(), "one scale exponent per row expected");

    std::vector<std::size_t> order(rows.size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<std::size_t> starts(rows.size(), length);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t t = 0; t < rows[r].size(); ++t)
            if (rows[r][t] != 0) {
                starts[r] = t;
                break;
            }
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return starts[a] < starts[b]; });

    for (std::size_t r : order) {
        require(rows[r].size() == length, "row length mismatch");
        std::vector<std::uint64_t> row(length);
        for (std::size_t t = 0; t < length; ++t)
            row[t] = mpz_class(rows[r][t] % qz).get_ui();
        m.rows.push_back(std::move(row));
        m.digit_range.push_back(pow_p(p, prec - level_m[r]).get_ui());
        m.start.push_back(starts[r]);
    }
    return m;
}

std::vector<std::uint32_t> row_levels(const CyclicCode& code) {
    std::vector<std::uint32_t> level_m;
    int prev_deg = static_cast<int>(code.n());
    for (const ChainLevel& lv : code.chain()) {
        const int d = lv.f.degree();
        for (int i = 0; i < prev_deg - d; ++i)
            level_m.push_back(lv.m);
        prev_deg = d;
    }
    return level_m;
}

} // namespace

std::uint64_t EnumMatrix::word_count() const {
    std::uint64_t total = 1;
    for (std::uint64_t r : digit_range) {
        if (r != 0 && total > std::numeric_limits<std::uint64_t>::max() / r)
            return std::numeric_limits<std::uint64_t>::max();
        total *= r;
    }
    return total;
}

EnumMatrix pack_code(const CyclicCode& code) {
    return pack_rows(code.p(), code.prec(), code.generator_matrix(), row_levels(code),
                     code.n());
}

EnumMatrix pack_extended(const ExtendedCode& code) {
    return pack_rows(code.base().p(), code.base().prec(), code.generator_matrix(),
                     row_levels(code.base()), code.base().n() + 1);
}

namespace {

/// Depth-first scan over all digit tuples.  bound[t] is the first coordinate
/// that may still change once rows 0..t-1 are fixed; coordinates below it
/// contribute their final weight, which drives the pruning.
struct Scan {
    const EnumMatrix& m;
    Metric metric;
    std::uint64_t budget;
    std::vector<std::size_t> bound;

    /// shared (atomic) best for the parallel scan, local best otherwise
    std::atomic<std::uint64_t>* shared_best = nullptr;
    std::uint64_t best = kNoWeight;
    std::uint64_t words = 0;
    bool prune = true;
    std::vector<std::uint64_t>* hist = nullptr;

    std::vector<std::uint64_t> acc;

    explicit Scan(const EnumMatrix& mm, Metric me, std::uint64_t bud)
        : m(mm), metric(me), budget(bud) {
        bound.assign(m.rows.size() + 1, m.length);
        for (std::size_t t = 0; t < m.rows.size(); ++t)
            bound[t] = m.start[t];
        acc.assign(m.length, 0);
    }

    std::uint64_t current_best() const {
        if (shared_best)
            return shared_best->load(std::memory_order_relaxed);
        return best;
    }

    void offer(std::uint64_t w) {
        if (shared_best) {
            std::uint64_t cur = shared_best->load(std::memory_order_relaxed);
            while (w < cur &&
                   !shared_best->compare_exchange_weak(cur, w, std::memory_order_relaxed)) {
            }
        }
        best = std::min(best, w);
    }

    void leaf(std::uint64_t w, bool nonzero) {
        if (++words > budget)
            throw domain_error(errc::budget_exceeded,
                               "codeword enumeration exceeded the word budget");
        if (hist) {
            require(w < hist->size(), "weight outside the histogram range");
            ++(*hist)[w];
        }
        if (nonzero)
            offer(w);
    }

    void run(std::size_t t, std::uint64_t final_w, bool nonzero) {
        if (t == m.rows.size()) {
            leaf(final_w, nonzero);
            return;
        }
        const std::vector<std::uint64_t>& row = m.rows[t];
        const std::size_t lo = bound[t], hi = bound[t + 1];
        std::vector<std::uint64_t> saved(acc.begin() + static_cast<std::ptrdiff_t>(lo),
                                         acc.end());
        for (std::uint64_t c = 0; c < m.digit_range[t]; ++c) {
            if (c > 0)
                for (std::size_t s = lo; s < m.length; ++s) {
                    acc[s] += row[s];
                    if (acc[s] >= m.q)
                        acc[s] -= m.q;
                }
            std::uint64_t w = final_w;
            for (std::size_t s = lo; s < hi; ++s)
                w += coord_weight(acc[s], m.q, metric);
            if (!prune || w < current_best())
                run(t + 1, w, nonzero || c > 0);
        }
        std::copy(saved.begin(), saved.end(), acc.begin() + static_cast<std::ptrdiff_t>(lo));
    }
};

WeightScan scan_serial(const EnumMatrix& m, Metric metric, const EnumOptions& opts,
                       bool prune, std::vector<std::uint64_t>* hist) {
    if (m.word_count() <= 1)
        throw domain_error(errc::invalid_argument, "no nonzero codeword to enumerate");
    if (!prune && m.word_count() > opts.budget)
        throw domain_error(errc::budget_exceeded,
                           "codeword count exceeds the enumeration budget");
    Scan scan(m, metric, opts.budget);
    scan.prune = prune;
    scan.hist = hist;
    scan.run(0, 0, false);
    require(scan.best != kNoWeight, "a nonzero codeword must have been visited");
    return WeightScan{scan.best, scan.words};
}

#ifdef _OPENMP
WeightScan scan_parallel(const EnumMatrix& m, Metric metric, const EnumOptions& opts,
                         bool prune, std::vector<std::uint64_t>* hist) {
    if (m.word_count() <= 1)
        throw domain_error(errc::invalid_argument, "no nonzero codeword to enumerate");
    if (!prune && m.word_count() > opts.budget)
        throw domain_error(errc::budget_exceeded,
                           "codeword count exceeds the enumeration budget");

    const int threads = opts.threads > 0 ? opts.threads : omp_get_max_threads();

    /* Flatten enough leading rows that every thread gets many prefixes. */
    std::size_t lead = 0;
    std::uint64_t prefixes = 1;
    while (lead < m.rows.size() && prefixes < std::uint64_t(threads) * 8 &&
           prefixes * m.digit_range[lead] <= 65536)
        prefixes *= m.digit_range[lead++];
    if (lead == 0) {
        lead = 1;
        prefixes = m.digit_range[0];
    }

    std::atomic<std::uint64_t> best(kNoWeight);
    std::atomic<std::uint64_t> total_words(0);
    std::atomic<bool> over_budget(false);
    std::vector<std::vector<std::uint64_t>> partial_hists;
    if (hist)
        partial_hists.assign(static_cast<std::size_t>(threads),
                             std::vector<std::uint64_t>(hist->size(), 0));

#pragma omp parallel num_threads(threads)
    {
        Scan scan(m, metric, opts.budget);
        scan.prune = prune;
        scan.shared_best = &best;
        if (hist)
            scan.hist = &partial_hists[static_cast<std::size_t>(omp_get_thread_num())];

#pragma omp for schedule(dynamic)
        for (std::int64_t pid = 0; pid < static_cast<std::int64_t>(prefixes); ++pid) {
            if (over_budget.load(std::memory_order_relaxed))
                continue;
            /* decode the prefix digits and replay them into the scan state */
            std::fill(scan.acc.begin(), scan.acc.end(), 0);
            std::uint64_t rest = static_cast<std::uint64_t>(pid);
            std::uint64_t final_w = 0;
            bool nonzero = false;
            bool viable = true;
            for (std::size_t t = 0; t < lead; ++t) {
                const std::uint64_t c = rest % m.digit_range[t];
                rest /= m.digit_range[t];
                if (c > 0) {
                    nonzero = true;
                    for (std::size_t s = m.start[t]; s < m.length; ++s) {
                        scan.acc[s] += (c * m.rows[t][s]) % m.q;
                        if (scan.acc[s] >= m.q)
                            scan.acc[s] -= m.q;
                    }
                }
                for (std::size_t s = scan.bound[t]; s < scan.bound[t + 1]; ++s)
                    final_w += coord_weight(scan.acc[s], m.q, metric);
                if (prune && final_w >= best.load(std::memory_order_relaxed)) {
                    viable = false;
                    break;
                }
            }
            if (viable) {
                try {
                    scan.run(lead, final_w, nonzero);
                } catch (const domain_error&) {
                    over_budget.store(true, std::memory_order_relaxed);
                }
            }
        }
        total_words.fetch_add(scan.words, std::memory_order_relaxed);
    }

    if (over_budget.load() || total_words.load() > opts.budget)
        throw domain_error(errc::budget_exceeded,
                           "codeword enumeration exceeded the word budget");
    if (hist)
        for (const auto& part : partial_hists)
            for (std::size_t w = 0; w < part.size(); ++w)
                (*hist)[w] += part[w];
    require(best.load() != kNoWeight, "a nonzero codeword must have been visited");
    return WeightScan{best.load(), total_words.load()};
}
#endif

std::size_t hist_size(const EnumMatrix& m, Metric metric) {
    const std::uint64_t per_coord = metric == Metric::hamming ? 1 : m.q / 2;
    const std::uint64_t max_w = per_coord * m.length;
    if (max_w >= (std::uint64_t(1) << 20))
        throw domain_error(errc::invalid_argument, "weight histogram too large");
    return static_cast<std::size_t>(max_w) + 1;
}

} // namespace

WeightScan min_weight_serial(const EnumMatrix& m, Metric metric, const EnumOptions& opts) {
    return scan_serial(m, metric, opts, true, nullptr);
}

WeightScan min_weight(const EnumMatrix& m, Metric metric, const EnumOptions& opts) {
#ifdef _OPENMP
    return scan_parallel(m, metric, opts, true, nullptr);
#else
    return min_weight_serial(m, metric, opts);
#endif
}

std::vector<std::uint64_t> weight_distribution_serial(const EnumMatrix& m, Metric metric,
                                                      const EnumOptions& opts) {
    std::vector<std::uint64_t> hist(hist_size(m, metric), 0);
    scan_serial(m, metric, opts, false, &hist);
    return hist;
}

std::vector<std::uint64_t> weight_distribution(const EnumMatrix& m, Metric metric,
                                               const EnumOptions& opts) {
    std::vector<std::uint64_t> hist(hist_size(m, metric), 0);
#ifdef _OPENMP
    scan_parallel(m, metric, opts, false, &hist);
#else
    scan_serial(m, metric, opts, false, &hist);
#endif
    return hist;
}

} // namespace zqcode
