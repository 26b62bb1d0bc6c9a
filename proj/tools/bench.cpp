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

/// Kernel benchmark: the OpenMP codeword-enumeration and minor-scan kernels
/// against their serial reference implementations, verifying agreement on
/// every run.  Exit 1 if any pair disagrees.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "zqcode/catalog.hpp"
#include "zqcode/kernels.hpp"
#include "zqcode/mds.hpp"

using namespace zqcode;

namespace {

double ms_of(const std::function<void()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    body();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

struct Row {
    std::string name;
    std::uint64_t words = 0;
    double serial_ms = 0, parallel_ms = 0;
    bool equal = false;
};

void print_rows(const std::vector<Row>& rows) {
    std::printf("%-38s %12s %12s %12s %9s %6s\n", "kernel", "words",
                "serial ms", "parallel ms", "speedup", "agree");
    for (const Row& r : rows)
        std::printf("%-38s %12llu %12.2f %12.2f %9.2f %6s\n", r.name.c_str(),
                    static_cast<unsigned long long>(r.words), r.serial_ms,
                    r.parallel_ms, r.serial_ms / std::max(r.parallel_ms, 1e-9),
                    r.equal ? "ok" : "MISMATCH");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial vs parallel kernel comparison"};
    int threads = 0;
    bool heavy = false;
    app.add_option("--threads", threads, "thread cap (0: OpenMP default)");
    app.add_flag("--heavy", heavy, "add the 128^4-word distribution run");
    CLI11_PARSE(app, argc, argv);

    EnumOptions serial_opts;
    EnumOptions par_opts;
    par_opts.threads = threads;

    std::vector<Row> rows;

    const std::uint32_t dist_max = heavy ? 7u : 6u;
    for (std::uint32_t a = 4; a <= dist_max; ++a) {
        const EnumMatrix m = pack_extended(hamming_extended(a));
        if (heavy) {
            serial_opts.budget = std::uint64_t(1) << 32;
            par_opts.budget = serial_opts.budget;
        }
        Row row;
        row.name = "lee-distribution length-8 a=" + std::to_string(a);
        row.words = m.word_count();
        std::vector<std::uint64_t> ds, dp;
        row.serial_ms =
            ms_of([&] { ds = weight_distribution_serial(m, Metric::lee, serial_opts); });
        row.parallel_ms =
            ms_of([&] { dp = weight_distribution(m, Metric::lee, par_opts); });
        row.equal = ds == dp;
        rows.push_back(row);
    }

    {
        const EnumMatrix m = pack_extended(hamming_extended(6));
        Row row;
        row.name = "min-lee-weight length-8 a=6";
        WeightScan ws, wp;
        row.serial_ms = ms_of([&] { ws = min_weight_serial(m, Metric::lee, serial_opts); });
        row.parallel_ms = ms_of([&] { wp = min_weight(m, Metric::lee, par_opts); });
        row.words = ws.words;
        row.equal = ws.weight == wp.weight;
        rows.push_back(row);
    }

    {
        const EnumMatrix m = pack_code(golay2_cyclic(1));
        Row row;
        row.name = "hamming-distribution length-23 a=1";
        row.words = m.word_count();
        std::vector<std::uint64_t> ds, dp;
        row.serial_ms =
            ms_of([&] { ds = weight_distribution_serial(m, Metric::hamming, serial_opts); });
        row.parallel_ms =
            ms_of([&] { dp = weight_distribution(m, Metric::hamming, par_opts); });
        row.equal = ds == dp;
        rows.push_back(row);
    }

    {
        const QuadMatrix m = golay3_quad_matrix();
        Row row;
        row.name = "minor-scan 6x12 quadratic ring";
        MinorScan s1, sn;
        row.serial_ms = ms_of([&] { s1 = scan_minors(m, 1); });
        row.parallel_ms = ms_of([&] { sn = scan_minors(m, threads); });
        row.words = s1.checked;
        row.equal = s1.all_nonzero == sn.all_nonzero && s1.checked == sn.checked;
        rows.push_back(row);
    }

    print_rows(rows);
    for (const Row& r : rows)
        if (!r.equal) return 1;
    return 0;
}
