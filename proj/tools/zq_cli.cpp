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

/// Command-line front end.
///
/// Subcommands: factor, lift, solve, code, census, catalog, verify.
/// All numeric output is exact; reports are JSON (or CSV/table for the
/// census).  Errors go to stderr as one-line JSON objects
/// {code, message, context}.  Exit codes: 0 success, 1 domain error or
/// failed verification, 2 usage error.  The environment variable
/// PADIC_THREADS caps the parallel kernels (0 or unset: OpenMP default).

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "zqcode/catalog.hpp"
#include "zqcode/census.hpp"
#include "zqcode/errors.hpp"
#include "zqcode/hensel.hpp"
#include "zqcode/verify_suite.hpp"

using nlohmann::json;
using namespace zqcode;

namespace {

int env_threads() {
    const char* s = std::getenv("PADIC_THREADS");
    if (s == nullptr || *s == '\0') return 0;
    char* end = nullptr;
    const long v = std::strtol(s, &end, 10);
    if (end == s || *end != '\0' || v < 0)
        throw domain_error(errc::invalid_argument,
                           "PADIC_THREADS must be a non-negative integer",
                           std::string("PADIC_THREADS=") + s);
    return static_cast<int>(v);
}

/* ';'-separated poly text; an empty list denotes the zero code. */
std::vector<Poly> parse_generators(std::uint32_t p, std::uint32_t prec,
                                   const std::string& text) {
    std::vector<Poly> gens;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ';')) {
        const auto first = part.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        const auto last = part.find_last_not_of(" \t");
        gens.push_back(Poly::parse(p, prec, part.substr(first, last - first + 1)));
    }
    return gens;
}

/* The canonical generating set p^m f per chain level, ';'-joined; feeding
   this back through --gens reproduces the same ideal. */
std::string chain_text(const CyclicCode& code) {
    std::string out;
    for (const ChainLevel& level : code.chain()) {
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), code.p(), level.m);
        if (!out.empty()) out += ";";
        out += level.f.scaled(scale).to_string();
    }
    return out;
}

json opt_u64(const std::optional<std::uint64_t>& v) {
    return v ? json(*v) : json(nullptr);
}

json report_json(const CodeReport& r, const CyclicCode& code) {
    json j;
    j["n"] = code.n();
    j["p"] = code.p();
    j["a"] = code.prec();
    j["type"] = r.type;
    j["dual_type"] = r.dual_type;
    j["size_exp"] = r.size_exponent;
    j["d_hamming"] = opt_u64(r.d_hamming);
    j["d_lee"] = opt_u64(r.d_lee);
    j["d_star_hamming"] = opt_u64(r.d_star_hamming);
    j["d_star_lee"] = opt_u64(r.d_star_lee);
    j["mds"] = r.mds ? json(*r.mds) : json(nullptr);
    j["ideal"] = json{{"exponents", r.exponents}, {"text", r.ideal}};
    j["generators"] = chain_text(code);
    j["words"] = r.words;
    return j;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// ---------------------------------------------------------------- factor/lift

int run_lift(std::uint32_t n, std::uint32_t p, std::uint32_t prec) {
    const LiftedFactorization lift = lift_cyclotomic(n, p, prec);
    for (std::size_t i = 0; i < lift.count(); ++i)
        std::cout << "[" << lift.base.cosets.at(i).front() << "] "
                  << lift.factors[i].to_string() << "\n";
    return 0;
}

// --------------------------------------------------------------------- solve

int run_solve(const std::string& poly_text, std::uint32_t p, std::uint32_t root0,
              std::uint32_t prec, bool digits) {
    const Poly f = Poly::parse(p, prec, poly_text);
    const ZqInt r = hensel_root(f, root0, prec);
    std::cout << (digits ? r.digit_string() : r.residue().get_str()) << "\n";
    return 0;
}

// ---------------------------------------------------------------------- code

int run_code(const std::string& action, std::uint32_t n, std::uint32_t p,
             std::uint32_t a, const std::string& gens_text,
             const std::string& extend, std::uint64_t max_enum) {
    EnumOptions opts;
    opts.budget = max_enum;
    opts.threads = env_threads();

    const ContextPtr ctx = make_context(n, p, a);
    const CyclicCode base =
        CyclicCode::from_generators(ctx, parse_generators(p, a, gens_text));
    const CyclicCode target = action == "dual" ? base.dual() : base;

    const CodeReport r = analyze(target, action == "distance", opts);
    json j = report_json(r, target);
    if (action == "idempotent") {
        const std::optional<Poly> e = target.idempotent_generator();
        j["idempotent"] = e ? json(e->to_string()) : json(nullptr);
    } else if (action == "principal") {
        j["principal"] = target.principal_generator().to_string();
    }
    if (extend == "zero_sum") {
        const ExtendedCode ext = ExtendedCode::zero_sum(target);
        j["extension"] =
            json{{"kind", "zero_sum"}, {"length", ext.length()},
                 {"self_dual", ext.is_self_dual()}};
    }
    emit(j);
    return 0;
}

// -------------------------------------------------------------------- census

std::string size_label(std::uint32_t p, std::uint64_t exponent) {
    return std::to_string(p) + "^" + std::to_string(exponent);
}

std::string join_exponents(const std::vector<std::uint32_t>& e) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) out += " ";
        out += std::to_string(e[i]);
    }
    return out;
}

std::string cell(const std::optional<std::uint64_t>& v) {
    return v ? std::to_string(*v) : std::string();
}

void print_grid(const std::vector<std::vector<std::string>>& grid) {
    std::vector<std::size_t> width;
    for (const auto& row : grid)
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (width.size() <= c) width.resize(c + 1, 0);
            width[c] = std::max(width[c], row[c].size());
        }
    for (std::size_t r = 0; r < grid.size(); ++r) {
        std::string line;
        for (std::size_t c = 0; c < grid[r].size(); ++c) {
            std::string f = grid[r][c];
            f.resize(width[c], ' ');
            line += f;
            if (c + 1 < grid[r].size()) line += "  ";
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        std::cout << line << "\n";
        if (r == 0) {
            std::string rule;
            for (std::size_t c = 0; c < width.size(); ++c) {
                rule += std::string(width[c], '-');
                if (c + 1 < width.size()) rule += "  ";
            }
            std::cout << rule << "\n";
        }
    }
}

int run_census(std::uint32_t n, std::uint32_t p, std::uint32_t a, bool distances,
               const std::string& format, std::uint64_t max_enum) {
    EnumOptions opts;
    opts.budget = max_enum;
    opts.threads = env_threads();

    const ContextPtr ctx = make_context(n, p, a);
    const std::vector<CodeReport> rows = census(ctx, distances, opts);

    if (format == "json") {
        json out;
        out["n"] = n;
        out["p"] = p;
        out["a"] = a;
        json arr = json::array();
        for (const CodeReport& r : rows)
            arr.push_back(report_json(r, CyclicCode::from_exponents(ctx, r.exponents)));
        out["codes"] = arr;
        emit(out);
        return 0;
    }

    if (format == "csv") {
        std::cout << "exponents,type,dual_type,ideal,size_exp,d_hamming,d_lee,"
                     "d_star_hamming,d_star_lee,mds,words,generators\n";
        for (const CodeReport& r : rows) {
            const CyclicCode code = CyclicCode::from_exponents(ctx, r.exponents);
            std::cout << join_exponents(r.exponents) << "," << r.type << ","
                      << r.dual_type << "," << r.ideal << "," << r.size_exponent
                      << "," << cell(r.d_hamming) << "," << cell(r.d_lee) << ","
                      << cell(r.d_star_hamming) << "," << cell(r.d_star_lee) << ","
                      << (r.mds ? (*r.mds ? "true" : "false") : "") << ","
                      << r.words << ",\"" << chain_text(code) << "\"\n";
        }
        return 0;
    }

    std::vector<std::vector<std::string>> grid;
    std::vector<std::string> head = {"#", "exponents", "type", "ideal", "size"};
    if (distances) {
        head.insert(head.end(), {"d_H", "d_L", "d*_H", "d*_L", "mds"});
    }
    grid.push_back(head);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const CodeReport& r = rows[i];
        std::vector<std::string> row = {std::to_string(i + 1),
                                        join_exponents(r.exponents), r.type,
                                        r.ideal, size_label(p, r.size_exponent)};
        if (distances) {
            row.push_back(cell(r.d_hamming));
            row.push_back(cell(r.d_lee));
            row.push_back(cell(r.d_star_hamming));
            row.push_back(cell(r.d_star_lee));
            row.push_back(r.mds ? (*r.mds ? "yes" : "no") : "");
        }
        grid.push_back(row);
    }
    print_grid(grid);
    return 0;
}

// ------------------------------------------------------------------- catalog

json scan_json(const QuadMatrix& m, bool exhaustive, std::uint64_t samples,
               std::uint64_t seed) {
    const MinorScan s = exhaustive ? scan_minors(m, env_threads())
                                   : scan_minors_sampled(m, samples, seed);
    json j;
    j["rows"] = m.rows;
    j["cols"] = m.cols;
    j["minor_order"] = m.rows;
    j["total"] = s.total;
    j["checked"] = s.checked;
    j["all_nonzero"] = s.all_nonzero;
    j["exhaustive"] = exhaustive;
    if (!exhaustive) {
        j["samples"] = samples;
        j["seed"] = seed;
    }
    if (!s.witness.empty()) j["witness_columns"] = s.witness;
    j["singleton_distance"] = m.cols - m.rows + 1;
    return j;
}

json family_json(const std::string& family, const CyclicCode& code,
                 const ExtendedCode& ext, const Poly& generator) {
    const CodeReport r = analyze(code, false);
    json j = report_json(r, code);
    j["family"] = family;
    j["generator"] = generator.to_string();
    j["extension_self_dual"] = ext.is_self_dual();
    return j;
}

int run_catalog(const std::string& family, std::uint32_t n, std::uint32_t p,
                std::uint32_t prec, std::uint32_t r, std::uint32_t m,
                std::uint32_t delta, bool full, std::uint64_t samples,
                std::uint64_t seed) {
    if (family == "hamming") {
        json j = family_json("hamming", hamming_cyclic(prec),
                             hamming_extended(prec), hamming_generator(prec));
        j["minors"] = scan_json(hamming_quad_matrix(), true, samples, seed);
        emit(j);
        return 0;
    }
    if (family == "golay2") {
        json j = family_json("golay2", golay2_cyclic(prec),
                             golay2_extended(prec), golay2_generator(prec));
        j["minors"] = scan_json(golay2_quad_matrix(), full, samples, seed);
        emit(j);
        return 0;
    }
    if (family == "golay3") {
        json j = family_json("golay3", golay3_cyclic(prec),
                             golay3_extended(prec), golay3_generator(prec));
        j["minors"] = scan_json(golay3_quad_matrix(), true, samples, seed);
        emit(j);
        return 0;
    }
    if (family == "qr") {
        const QrPair pair = qr_codes(n, prec);
        json j;
        j["family"] = "qr";
        j["n"] = n;
        j["p"] = 2;
        j["prec"] = prec;
        j["sqrt_minus_n"] = pair.sqrt_minus_n.residue().get_str();
        j["sqrt_minus_n_digits"] = pair.sqrt_minus_n.digit_string();
        j["idempotent1"] = pair.idempotent1.to_string();
        j["idempotent2"] = pair.idempotent2.to_string();
        j["code1"] = report_json(analyze(pair.code1, false), pair.code1);
        j["code2"] = report_json(analyze(pair.code2, false), pair.code2);
        j["extension_self_dual"] = qr_extended_self_dual(n, prec).is_self_dual();
        emit(j);
        return 0;
    }
    if (family == "bch") {
        const CyclicCode code = bch_lift(p, m, delta, prec);
        json j = report_json(analyze(code, false), code);
        j["family"] = "bch";
        j["m"] = m;
        j["delta"] = delta;
        emit(j);
        return 0;
    }
    // family == "rm" (membership enforced by the parser)
    const CyclicCode code = rm_lift(r, m, prec);
    json j = report_json(analyze(code, false), code);
    j["family"] = "rm";
    j["r"] = r;
    j["m"] = m;
    emit(j);
    return 0;
}

// -------------------------------------------------------------------- verify

int run_verify(const std::string& suite, bool full, std::uint64_t samples,
               std::uint64_t seed) {
    VerifyOptions vo;
    vo.full_minors = full || suite == "full";
    vo.minor_samples = samples;
    vo.minor_seed = seed;
    vo.threads = env_threads();
    const std::vector<CriterionResult> results = run_verify_suite(vo, &std::cout);
    std::size_t passed = 0;
    for (const CriterionResult& r : results) passed += r.pass ? 1 : 0;
    std::cout << "verify: " << passed << "/" << results.size()
              << " criteria passed\n";
    if (passed == results.size()) return 0;
    const json err = {{"code", "internal_check_failed"},
                      {"message", "verification suite reported failures"},
                      {"context", "verify --suite " + suite}};
    std::cerr << err.dump() << "\n";
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact structure theory of cyclic codes over Z/p^a"};
    app.require_subcommand(1);

    std::uint32_t n = 7, p = 2, a = 2, prec_factor = 1, prec = 8;
    std::uint32_t root0 = 0, rm_r = 1, bm = 3, delta = 3;
    std::uint64_t max_enum = std::uint64_t(1) << 28;
    std::uint64_t samples = 10000, seed = 24036583;
    bool digits = false, distances = false, full = false;
    std::string gens_text, poly_text, action, extend, format = "table";
    std::string family, suite;

    CLI::App* factor_cmd =
        app.add_subcommand("factor", "factor X^n - 1 into monic polynomials "
                                     "with irreducible mod-p reductions");
    factor_cmd->add_option("--n", n, "length (coprime to p)")->required();
    factor_cmd->add_option("--p", p, "prime")->required();
    factor_cmd->add_option("--prec", prec_factor, "digits of precision")
        ->default_val(1);

    CLI::App* lift_cmd = app.add_subcommand(
        "lift", "lift the factorization of X^n - 1 to precision p^prec");
    lift_cmd->add_option("--n", n, "length (coprime to p)")->required();
    lift_cmd->add_option("--p", p, "prime")->required();
    lift_cmd->add_option("--prec", prec, "digits of precision")->default_val(8);

    CLI::App* solve_cmd = app.add_subcommand(
        "solve", "refine a simple mod-p root of a polynomial to full precision");
    solve_cmd->add_option("--poly", poly_text, "coefficients, constant first")
        ->required();
    solve_cmd->add_option("--p", p, "prime")->required();
    solve_cmd->add_option("--root", root0, "starting root mod p")->default_val(0);
    solve_cmd->add_option("--prec", prec, "digits of precision")->default_val(8);
    solve_cmd->add_flag("--digits", digits,
                        "print the digit string, least significant first");

    CLI::App* code_cmd = app.add_subcommand(
        "code", "canonical report on the cyclic code spanned by --gens");
    code_cmd
        ->add_option("action", action, "info|dual|distance|idempotent|principal")
        ->required()
        ->check(CLI::IsMember(
            {"info", "dual", "distance", "idempotent", "principal"}));
    code_cmd->add_option("--n", n, "length (coprime to p)")->required();
    code_cmd->add_option("--p", p, "prime")->required();
    code_cmd->add_option("--a", a, "digits of precision")->required();
    code_cmd
        ->add_option("--gens", gens_text,
                     "generator polynomials, ';'-separated (empty: zero code)")
        ->required();
    code_cmd->add_option("--extend", extend, "also report a one-digit extension")
        ->check(CLI::IsMember({"zero_sum"}));
    code_cmd->add_option("--max-enum", max_enum, "codeword enumeration budget");

    CLI::App* census_cmd = app.add_subcommand(
        "census", "enumerate every cyclic code of length n over Z/p^a");
    census_cmd->add_option("--n", n, "length (coprime to p)")->required();
    census_cmd->add_option("--p", p, "prime")->required();
    census_cmd->add_option("--a", a, "digits of precision")->required();
    census_cmd->add_flag("--distances", distances,
                         "measure minimum distances (enumerates codewords)");
    census_cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv", "table"}));
    census_cmd->add_option("--max-enum", max_enum, "codeword enumeration budget");

    CLI::App* catalog_cmd =
        app.add_subcommand("catalog", "named code families at any precision");
    catalog_cmd->add_option("family", family, "hamming|golay2|golay3|qr|bch|rm")
        ->required()
        ->check(CLI::IsMember({"hamming", "golay2", "golay3", "qr", "bch", "rm"}));
    catalog_cmd->add_option("--n", n, "length for the qr family")->default_val(7);
    catalog_cmd->add_option("--prec", prec, "digits of precision")->default_val(8);
    catalog_cmd->add_option("--p", p, "prime for the bch family")->default_val(2);
    catalog_cmd->add_option("--r", rm_r, "order for the rm family")->default_val(1);
    catalog_cmd->add_option("--m", bm, "field degree for bch/rm")->default_val(3);
    catalog_cmd->add_option("--delta", delta, "designed distance for bch")
        ->default_val(3);
    catalog_cmd->add_flag(
        "--full", full, "exhaustive minor scan for golay2 (default: sampled)");
    catalog_cmd->add_option("--samples", samples, "sampled minor count");
    catalog_cmd->add_option("--seed", seed, "sampling seed");

    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "run the acceptance battery, one pass/fail line per item");
    verify_cmd->add_option("--suite", suite, "paper|full")
        ->required()
        ->check(CLI::IsMember({"paper", "full"}));
    verify_cmd->add_flag("--full", full, "exhaustive minor scan");
    verify_cmd->add_option("--samples", samples, "sampled minor count");
    verify_cmd->add_option("--seed", seed, "sampling seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        const json err = {{"code", "usage"},
                          {"message", e.what()},
                          {"context", e.get_name()}};
        std::cerr << err.dump() << "\n";
        return 2;
    }

    try {
        if (*factor_cmd) return run_lift(n, p, prec_factor);
        if (*lift_cmd) return run_lift(n, p, prec);
        if (*solve_cmd) return run_solve(poly_text, p, root0, prec, digits);
        if (*code_cmd)
            return run_code(action, n, p, a, gens_text, extend, max_enum);
        if (*census_cmd)
            return run_census(n, p, a, distances, format, max_enum);
        if (*catalog_cmd)
            return run_catalog(family, n, p, prec, rm_r, bm, delta, full,
                               samples, seed);
        if (*verify_cmd) return run_verify(suite, full, samples, seed);
        return 2; // unreachable: require_subcommand(1)
    } catch (const domain_error& e) {
        const json err = {{"code", errc_name(e.code())},
                          {"message", e.what()},
                          {"context", e.context()}};
        std::cerr << err.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        const json err = {{"code", "internal_check_failed"},
                          {"message", e.what()},
                          {"context", ""}};
        std::cerr << err.dump() << "\n";
        return 1;
    }
}
