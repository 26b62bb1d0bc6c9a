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
#include <array>
#include <map>
#include <sstream>

#include "zqcode/errors.hpp"

namespace zqcode {

namespace {

std::string chain_cell(const CyclicCode& code) {
    if (code.is_zero_code())
        return "0 (0)";
    const ExtendedCode ext = ExtendedCode::zero_sum(code);
    std::string out;
    for (std::size_t level = 0; level < code.chain().size(); ++level) {
        if (!out.empty())
            out += "; ";
        const ChainLevel& lv = code.chain()[level];
        out += lv.f.scaled(pow_p(code.p(), lv.m)).to_string();
        out += " (" + ext.level_digit(level).balanced().get_str() + ")";
    }
    return out;
}

} // namespace

CodeReport analyze(const CyclicCode& code, bool distances, const EnumOptions& opts) {
    CodeReport r;
    r.exponents = code.exponents();
    r.generators = chain_cell(code);
    r.type = code.type_string();
    r.ideal = code.ideal_string();
    r.size_exponent = code.size_exponent();
    try {
        r.dual_type = code.dual().type_string();
    } catch (const domain_error&) {
        r.dual_type.clear(); /* mixed limit ideal: dual not representable */
    }

    if (distances && !code.is_zero_code()) {
        const EnumMatrix m = pack_code(code);
        const WeightScan h = min_weight(m, Metric::hamming, opts);
        const WeightScan l = min_weight(m, Metric::lee, opts);
        r.d_hamming = h.weight;
        r.d_lee = l.weight;

        const EnumMatrix e = pack_extended(ExtendedCode::zero_sum(code));
        const WeightScan eh = min_weight(e, Metric::hamming, opts);
        const WeightScan el = min_weight(e, Metric::lee, opts);
        r.d_star_hamming = eh.weight;
        r.d_star_lee = el.weight;

        r.words = std::max({h.words, l.words, eh.words, el.words});

        const TypeProfile prof = code.type_profile();
        const bool free_code = prof.levels.size() == 1 && prof.levels[0].m == 0;
        r.mds = free_code &&
                h.weight == code.n() - prof.levels[0].k + 1;
    }
    return r;
}

std::vector<CyclicCode> all_codes(const ContextPtr& ctx) {
    const std::size_t count = ctx->count();
    const std::uint32_t cap = ctx->prec();
    std::vector<std::uint32_t> exps(count, 0);
    std::vector<CyclicCode> out;
    for (;;) {
        out.push_back(CyclicCode::from_exponents(ctx, exps));
        std::size_t i = count;
        while (i > 0 && exps[i - 1] == cap)
            exps[--i] = 0;
        if (i == 0)
            break;
        ++exps[i - 1];
    }
    return out;
}

std::vector<CodeReport> census(const ContextPtr& ctx, bool distances,
                               const EnumOptions& opts) {
    std::vector<CodeReport> out;
    for (const CyclicCode& code : all_codes(ctx))
        out.push_back(analyze(code, distances, opts));
    return out;
}

namespace {

/// Traversal order of the 27 exponent triples (m at the linear factor,
/// then at the two reciprocal cubics).  Triples whose cubic exponents
/// are swapped give equivalent codes; the renderer keeps the
/// representative with m1 >= m2 and numbers rows by this full order.
constexpr std::array<std::array<std::uint32_t, 3>, 27> kOrder{{
    {2, 2, 2}, {1, 2, 2}, {2, 2, 1}, {2, 1, 2}, {1, 2, 1}, {1, 1, 2},
    {2, 1, 1}, {1, 1, 1}, {0, 0, 0}, {2, 0, 0}, {1, 0, 0}, {0, 2, 0},
    {0, 0, 2}, {0, 1, 0}, {0, 0, 1}, {2, 2, 0}, {2, 0, 2}, {1, 1, 0},
    {1, 0, 1}, {2, 1, 0}, {2, 0, 1}, {1, 2, 0}, {1, 0, 2}, {0, 2, 2},
    {0, 1, 1}, {0, 2, 1}, {0, 1, 2},
}};

std::string distance_cell(const CodeReport& r) {
    if (!r.d_lee.has_value())
        return "-(-)";
    return std::to_string(*r.d_lee) + "(" + std::to_string(*r.d_star_lee) + ")";
}

} // namespace

std::string render_census_table(const std::vector<CodeReport>& reports) {
    require(reports.size() == 27, "the table covers the 27 length-7 codes over Z4");
    std::map<std::vector<std::uint32_t>, const CodeReport*> by_exps;
    for (const CodeReport& r : reports) {
        require(r.exponents.size() == 3, "three-factor census expected");
        by_exps[r.exponents] = &r;
    }
    require(by_exps.size() == 27, "reports must be pairwise distinct");

    struct Row {
        std::string num, gens, type, ideal, dist;
    };
    std::vector<Row> rows;
    rows.push_back({"#", "generators", "type", "ideal", "d(d*)"});
    for (std::size_t i = 0; i < kOrder.size(); ++i) {
        const auto& t = kOrder[i];
        if (t[1] < t[2])
            continue; /* swap-equivalent to an earlier row */
        const auto it = by_exps.find({t[0], t[1], t[2]});
        require(it != by_exps.end(), "every exponent triple must be reported");
        const CodeReport& r = *it->second;
        rows.push_back({std::to_string(i + 1), r.generators, r.type, r.ideal,
                        distance_cell(r)});
    }

    std::array<std::size_t, 5> width{};
    for (const Row& row : rows) {
        width[0] = std::max(width[0], row.num.size());
        width[1] = std::max(width[1], row.gens.size());
        width[2] = std::max(width[2], row.type.size());
        width[3] = std::max(width[3], row.ideal.size());
        width[4] = std::max(width[4], row.dist.size());
    }

    std::ostringstream out;
    auto emit = [&](const Row& row) {
        auto pad = [](const std::string& s, std::size_t w, bool right) {
            std::string cell(w, ' ');
            const std::size_t at = right ? w - s.size() : 0;
            cell.replace(at, s.size(), s);
            return cell;
        };
        out << pad(row.num, width[0], true) << " | " << pad(row.gens, width[1], false)
            << " | " << pad(row.type, width[2], false) << " | "
            << pad(row.ideal, width[3], false) << " | " << row.dist << "\n";
    };
    emit(rows[0]);
    out << std::string(width[0], '-') << "-+-" << std::string(width[1], '-') << "-+-"
        << std::string(width[2], '-') << "-+-" << std::string(width[3], '-')
        << "-+-" << std::string(width[4], '-') << "\n";
    for (std::size_t i = 1; i < rows.size(); ++i)
        emit(rows[i]);
    return out.str();
}

std::vector<ChainShape> three_factor_shapes() {
    const std::vector<std::vector<std::size_t>> singles{{0}, {1}, {2}};
    const std::vector<std::vector<std::size_t>> pairs{{0, 1}, {0, 2}, {1, 2}};
    std::vector<ChainShape> shapes;
    for (const auto& g0 : singles)
        shapes.push_back({g0});
    for (const auto& g0 : pairs)
        shapes.push_back({g0});
    for (const auto& g0 : singles)
        shapes.push_back({g0, {}});
    for (const auto& g0 : pairs)
        shapes.push_back({g0, {}});
    for (const auto& g0 : pairs)
        for (std::size_t i : g0)
            shapes.push_back({g0, {i}});
    for (const auto& g0 : pairs)
        for (std::size_t i : g0)
            shapes.push_back({g0, {i}, {}});
    return shapes;
}

std::optional<ChainShape> chain_shape(const CyclicCode& code) {
    if (code.is_zero_code())
        return std::nullopt;
    ChainShape shape;
    for (const ChainLevel& lv : code.chain()) {
        std::vector<std::size_t> present;
        for (std::size_t i = 0; i < code.exponents().size(); ++i)
            if (code.exponents()[i] > lv.m)
                present.push_back(i);
        shape.push_back(std::move(present));
    }
    return shape;
}

} // namespace zqcode
