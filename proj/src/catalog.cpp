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

#include "zqcode/catalog.hpp"

#include <algorithm>
#include <set>

#include "zqcode/errors.hpp"

namespace zqcode {

namespace {

/// g = sum_i coeffs[i] X^i from exact integer coefficients.
Poly poly_from_mpz(std::uint32_t p, std::uint32_t prec,
                   const std::vector<mpz_class>& coeffs) {
    Poly g = Poly::constant(p, prec, 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        g = g + Poly::x_pow(p, prec, i).scaled(coeffs[i]);
    return g;
}

/// The principal ideal of the lifted factor containing the exponent-1 coset.
CyclicCode coset_one_code(std::uint32_t n, std::uint32_t p, std::uint32_t prec) {
    ContextPtr ctx = make_context(n, p, prec);
    std::vector<std::uint32_t> exps(ctx->count(), 0);
    exps.at(ctx->lift().coset_index(1)) = prec;
    return CyclicCode::from_exponents(std::move(ctx), std::move(exps));
}

QuadMatrix shifts_with_check(long c, const std::vector<QuadInt>& gen, std::size_t n,
                             std::size_t rank) {
    QuadMatrix m = QuadMatrix::zero(c, rank, n + 1);
    for (std::size_t r = 0; r < rank; ++r) {
        for (std::size_t t = 0; t < gen.size(); ++t)
            m.at(r, r + t) = gen[t];
        m.at(r, n) = QuadInt::integer(c, 1);
    }
    return m;
}

std::set<std::uint32_t> quadratic_residues(std::uint32_t n) {
    std::set<std::uint32_t> qr;
    for (std::uint64_t j = 1; j < n; ++j)
        qr.insert(static_cast<std::uint32_t>(j * j % n));
    return qr;
}

} // namespace

Poly hamming_generator(std::uint32_t prec) {
    const mpz_class w = quadratic_root(2, 2, 0, prec).residue();
    return poly_from_mpz(2, prec, {-1, w - 1, w, 1});
}

CyclicCode hamming_cyclic(std::uint32_t prec) {
    CyclicCode code = coset_one_code(7, 2, prec);
    require(code.chain().size() == 1 &&
                code.chain()[0].f == hamming_generator(prec),
            "the lifted length-7 factor must match its quadratic-root form");
    return code;
}

ExtendedCode hamming_extended(std::uint32_t prec) {
    return ExtendedCode::append_constant(hamming_cyclic(prec), ZqInt(2, prec, 1));
}

QuadMatrix hamming_quad_matrix() {
    const QuadInt w = QuadInt::omega(2);
    const QuadInt one = QuadInt::integer(2, 1);
    return shifts_with_check(2, {-one, w - one, w, one}, 7, 4);
}

namespace {

std::vector<mpz_class> golay2_coeffs(const mpz_class& v) {
    return {-1, v - 1, v + 2, 4, 4 - v, 3 - 2 * v, -2 * v - 1, -v - 3, -4, v - 3, v, 1};
}

} // namespace

Poly golay2_generator(std::uint32_t prec) {
    const mpz_class v = quadratic_root(2, 6, 0, prec).residue();
    return poly_from_mpz(2, prec, golay2_coeffs(v));
}

CyclicCode golay2_cyclic(std::uint32_t prec) {
    CyclicCode code = coset_one_code(23, 2, prec);
    require(code.chain().size() == 1 &&
                code.chain()[0].f == golay2_generator(prec),
            "the lifted length-23 factor must match its quadratic-root form");
    return code;
}

ExtendedCode golay2_extended(std::uint32_t prec) {
    return ExtendedCode::append_constant(golay2_cyclic(prec), ZqInt(2, prec, 1));
}

QuadMatrix golay2_quad_matrix() {
    const long c = 6;
    const QuadInt w = QuadInt::omega(c);
    auto qi = [&](long x, long y) { return QuadInt(c, mpz_class(x), mpz_class(y)); };
    const std::vector<QuadInt> gen{qi(-1, 0), w - qi(1, 0),  w + qi(2, 0),  qi(4, 0),
                                   qi(4, -1), qi(3, -2),     qi(-1, -2),    qi(-3, -1),
                                   qi(-4, 0), w - qi(3, 0),  w,             qi(1, 0)};
    return shifts_with_check(c, gen, 23, 12);
}

Poly golay3_generator(std::uint32_t prec) {
    const mpz_class t = quadratic_root(3, 3, 0, prec).residue();
    return poly_from_mpz(3, prec, {-1, t - 1, 1, -1, t, 1});
}

CyclicCode golay3_cyclic(std::uint32_t prec) {
    ContextPtr ctx = make_context(11, 3, prec);
    const Poly gen = golay3_generator(prec);
    const LiftedFactorization& lift = ctx->lift();
    std::size_t idx = lift.count();
    for (std::size_t i = 0; i < lift.count(); ++i)
        if (lift.factors[i] == gen) idx = i;
    require(idx < lift.count(),
            "the quadratic-root form must equal one lifted length-11 factor");
    std::vector<std::uint32_t> exps(ctx->count(), 0);
    exps.at(idx) = prec;
    return CyclicCode::from_exponents(std::move(ctx), std::move(exps));
}

ExtendedCode golay3_extended(std::uint32_t prec) {
    return ExtendedCode::append_constant(golay3_cyclic(prec), ZqInt(3, prec, 1));
}

QuadMatrix golay3_quad_matrix() {
    const long c = 3;
    const QuadInt w = QuadInt::omega(c);
    auto qi = [&](long x) { return QuadInt::integer(c, x); };
    return shifts_with_check(c, {qi(-1), w - qi(1), qi(1), qi(-1), w, qi(1)}, 11, 6);
}

namespace {

/// alpha + beta f_Q + gamma f_N as a length-n polynomial.
Poly qr_combination(std::uint32_t n, std::uint32_t prec, const ZqInt& alpha,
                    const ZqInt& beta, const ZqInt& gamma,
                    const std::set<std::uint32_t>& qr) {
    std::vector<mpz_class> coeffs(n);
    coeffs[0] = alpha.residue();
    for (std::uint32_t j = 1; j < n; ++j)
        coeffs[j] = qr.count(j) ? beta.residue() : gamma.residue();
    return poly_from_mpz(2, prec, coeffs);
}

} // namespace

QrPair qr_codes(std::uint32_t n, std::uint32_t prec) {
    const bool prime =
        mpz_probab_prime_p(mpz_class(n).get_mpz_t(), 40) != 0;
    if (n < 7 || n % 8 != 7 || !prime)
        throw domain_error(errc::bad_length,
                           "quadratic-residue construction needs a prime length "
                           "n = 7 (mod 8)");
    /* shifted_down(1) drops one digit of precision, so work one digit above
       the guard band and land every product at guard - 1 >= prec + 3. */
    const std::uint32_t guard = prec + 4;
    const ZqInt inv_n = ZqInt(2, guard - 1, static_cast<long>(n)).inverse();
    const ZqInt half_np1 = ZqInt(2, guard, static_cast<long>(n) + 1).shifted_down(1);
    const ZqInt half_nm1 = ZqInt(2, guard, static_cast<long>(n) - 1).shifted_down(1);
    const std::set<std::uint32_t> qr = quadratic_residues(n);

    ContextPtr ctx = make_context(n, 2, prec);
    std::vector<std::uint32_t> exps1(ctx->count(), 0);
    exps1.at(ctx->lift().coset_index(1)) = prec;
    const CyclicCode expected1 = CyclicCode::from_exponents(ctx, exps1);

    ZqInt s = sqrt_2adic(-ZqInt(2, guard, static_cast<long>(n)));
    Poly e1 = Poly::constant(2, prec, 0);
    bool matched = false;
    for (int branch = 0; branch < 2 && !matched; ++branch, s = -s) {
        const ZqInt one = ZqInt::one(2, guard);
        const ZqInt alpha = (half_np1 * inv_n).reduced(prec);
        const ZqInt beta = ((one + s).shifted_down(1) * inv_n).reduced(prec);
        const ZqInt gamma = ((one - s).shifted_down(1) * inv_n).reduced(prec);
        e1 = qr_combination(n, prec, alpha, beta, gamma, qr);
        matched = CyclicCode::from_generators(ctx, {e1}) == expected1;
    }
    require(matched, "one branch of sqrt(-n) must produce the residue-coset ideal");
    s = -s; /* undo the final loop increment */

    require(mul_mod_xn(e1, e1, n) == e1, "the residue idempotent must square to itself");

    const ZqInt one = ZqInt::one(2, guard);
    const ZqInt alpha2 = (half_nm1 * inv_n).reduced(prec);
    const ZqInt beta2 = ((s - one).shifted_down(1) * inv_n).reduced(prec);
    const ZqInt gamma2 = ((-s - one).shifted_down(1) * inv_n).reduced(prec);
    const Poly e2 = qr_combination(n, prec, alpha2, beta2, gamma2, qr);
    require(mul_mod_xn(e2, e2, n) == e2, "the even-sum idempotent must square to itself");

    const CyclicCode code2 = CyclicCode::from_generators(ctx, {e2});
    std::vector<std::uint32_t> exps2 = exps1;
    exps2.at(0) = prec; /* also annihilate the X - 1 component */
    require(code2 == CyclicCode::from_exponents(ctx, exps2),
            "the even-sum idempotent must generate ((X-1) pi)");

    return QrPair{expected1, code2, e1, e2, s.reduced(prec)};
}

ExtendedCode qr_extended_self_dual(std::uint32_t n, std::uint32_t prec) {
    return ExtendedCode::qr_self_dual(qr_codes(n, prec).code1);
}

CyclicCode bch_lift(std::uint32_t p, std::uint32_t m, std::uint32_t delta,
                    std::uint32_t prec) {
    const mpz_class nz = pow_p(p, m) - 1;
    require(nz.fits_uint_p(), "length p^m - 1 must fit a machine word");
    const std::uint32_t n = static_cast<std::uint32_t>(nz.get_ui());
    require(delta >= 1 && delta <= n, "designed distance out of range");
    ContextPtr ctx = make_context(n, p, prec);
    std::vector<std::uint32_t> exps(ctx->count(), 0);
    for (std::uint32_t j = 1; j < delta; ++j)
        exps.at(ctx->lift().coset_index(j)) = prec;
    return CyclicCode::from_exponents(std::move(ctx), std::move(exps));
}

CyclicCode rm_lift(std::uint32_t r, std::uint32_t m, std::uint32_t prec) {
    require(m >= 1 && r < m, "order must be below the number of variables");
    const std::uint32_t n = static_cast<std::uint32_t>((1u << m) - 1);
    ContextPtr ctx = make_context(n, 2, prec);
    std::vector<std::uint32_t> exps(ctx->count(), 0);
    for (std::uint32_t j = 1; j < n; ++j)
        if (static_cast<std::uint32_t>(__builtin_popcount(j)) < m - r)
            exps.at(ctx->lift().coset_index(j)) = prec;
    return CyclicCode::from_exponents(std::move(ctx), std::move(exps));
}

std::uint64_t root_lee_weight(std::uint32_t a) {
    const mpz_class root = quadratic_root(2, 2, 0, a).residue();
    const mpz_class q = pow_p(2, a);
    return std::min(root, mpz_class(q - root)).get_ui();
}

std::uint64_t root_lee_weight_recurrence(std::uint32_t a) {
    if (a == 1) return 0;
    const std::uint64_t alpha = quadratic_root(2, 2, 0, a - 1).residue().get_ui();
    const std::uint64_t bit =
        mpz_class(quadratic_root(2, 2, 0, a).residue() >> (a - 1)).get_ui() & 1;
    return bit ? (std::uint64_t(1) << (a - 1)) - alpha : alpha;
}

std::vector<LeeTowerRow> lee_distance_tower(std::uint32_t a_max,
                                            const EnumOptions& opts) {
    std::vector<LeeTowerRow> rows;
    for (std::uint32_t a = 1; a <= a_max; ++a) {
        LeeTowerRow row;
        row.a = a;
        const EnumMatrix m = pack_extended(hamming_extended(a));
        row.d_hamming = min_weight(m, Metric::hamming, opts).weight;
        row.d_lee = min_weight(m, Metric::lee, opts).weight;
        row.root_weight = root_lee_weight(a);
        row.recurrence_weight = root_lee_weight_recurrence(a);
        rows.push_back(row);
    }
    return rows;
}

} // namespace zqcode
