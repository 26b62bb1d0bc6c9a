// Copyright 2026 The zqcode authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "zqcode/hensel.hpp"

#include "zqcode/errors.hpp"

#include <algorithm>

namespace zqcode {

namespace {

Poly product(const std::vector<Poly>& fs, std::size_t lo, std::size_t hi) {
    Poly acc = Poly::constant(fs[lo].p(), fs[lo].prec(), 1);
    for (std::size_t i = lo; i < hi; ++i) acc = acc * fs[i];
    return acc;
}

/* characteristic polynomial of a square matrix over Z/p^prec, division-free
   (Samuelson-Berkowitz).  Entries are residues; returns monic Poly. */
Poly charpoly(const std::vector<std::vector<mpz_class>>& A, std::uint32_t p,
              std::uint32_t prec) {
    const std::size_t n = A.size();
    const mpz_class m = pow_p(p, prec);
    auto red = [&](mpz_class& x) { mpz_mod(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t()); };

    /* v holds the charpoly of the leading k-by-k block, highest power first */
    std::vector<mpz_class> v{mpz_class(1)};
    if (n == 0) return Poly::constant(p, prec, 1);
    v.push_back(-A[0][0]);
    red(v[1]);
    for (std::size_t k = 2; k <= n; ++k) {
        /* Toeplitz column: 1, -a, -(r c), -(r B c), -(r B^2 c), ... where B is
           the previous block, r the new row, c the new column */
        std::vector<mpz_class> s(k + 1, mpz_class(0));
        s[0] = 1;
        s[1] = -A[k - 1][k - 1];
        red(s[1]);
        std::vector<mpz_class> w(k - 1);
        for (std::size_t i = 0; i < k - 1; ++i) w[i] = A[i][k - 1];
        for (std::size_t j = 2; j <= k; ++j) {
            mpz_class dot(0);
            for (std::size_t i = 0; i < k - 1; ++i) dot += A[k - 1][i] * w[i];
            s[j] = -dot;
            red(s[j]);
            if (j == k) break;
            std::vector<mpz_class> nw(k - 1, mpz_class(0));
            for (std::size_t i = 0; i < k - 1; ++i) {
                for (std::size_t l = 0; l < k - 1; ++l) nw[i] += A[i][l] * w[l];
                red(nw[i]);
            }
            w = std::move(nw);
        }
        std::vector<mpz_class> nv(k + 1, mpz_class(0));
        for (std::size_t i = 0; i <= k; ++i) {
            for (std::size_t j = 0; j < std::min(i + 1, k); ++j)
                nv[i] += s[i - j] * v[j];
            red(nv[i]);
        }
        v = std::move(nv);
    }
    std::vector<mpz_class> coeffs(v.rbegin(), v.rend());
    return Poly(p, prec, std::move(coeffs));
}

} // namespace

std::pair<Poly, Poly> hensel_pair(const Poly& F, const Poly& g0, const Poly& h0) {
    const std::uint32_t p = F.p();
    const std::uint32_t prec = F.prec();
    if (!F.is_monic())
        throw domain_error(errc::not_monic, "refinement target must be monic");
    if (!g0.is_monic() || !h0.is_monic())
        throw domain_error(errc::not_monic, "refinement seeds must be monic");
    require((g0.reduced(1) * h0.reduced(1)) == F.reduced(1),
            "seed product does not match the target mod p");

    BezoutTriple bez = xgcd_mod_p(g0, h0);
    if (bez.g.degree() != 0)
        throw domain_error(errc::not_coprime,
                           "refinement seeds share a factor mod p",
                           "gcd_degree=" + std::to_string(bez.g.degree()));

    Poly g = g0.reduced(1), h = h0.reduced(1);
    Poly s = bez.s, t = bez.t;
    std::uint32_t k = 1;
    while (k < prec) {
        const std::uint32_t k2 = std::min(2 * k, prec);
        g = g.embedded(k2);
        h = h.embedded(k2);
        s = s.embedded(k2);
        t = t.embedded(k2);
        const Poly Fk = F.reduced(k2);
        const Poly one = Poly::constant(p, k2, 1);

        Poly e = Fk - g * h;
        auto [q, r] = divmod_monic(s * e, h);
        g = g + t * e + q * g;
        h = h + r;
        Poly b = s * g + t * h - one;
        auto [u, s_next] = divmod_monic(s * (one - b), h);
        s = std::move(s_next);
        t = t * (one - b) + u * g;
        k = k2;

        require(g.is_monic() && g.degree() == g0.degree(),
                "refined factor degree drifted");
        require(h.is_monic() && h.degree() == h0.degree(),
                "refined cofactor degree drifted");
    }
    Poly gp = prec == g.prec() ? g : g.embedded(prec);
    Poly hp = prec == h.prec() ? h : h.embedded(prec);
    require(gp * hp == F, "refined pair does not multiply back to the target");
    return {gp, hp};
}

namespace {

void split_lift(const Poly& F, const std::vector<Poly>& base, std::size_t lo,
                std::size_t hi, std::vector<Poly>& out) {
    if (hi - lo == 1) {
        require(F.reduced(1) == base[lo], "lifted factor lost its residue");
        out[lo] = F;
        return;
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    Poly g0 = product(base, lo, mid);
    Poly h0 = product(base, mid, hi);
    auto [g, h] = hensel_pair(F, g0, h0);
    split_lift(g, base, lo, mid, out);
    split_lift(h, base, mid, hi, out);
}

} // namespace

LiftedFactorization lift_factorization(const CyclotomicFactorization& base,
                                       std::uint32_t prec) {
    if (prec == 0)
        throw domain_error(errc::invalid_argument, "precision must be positive");
    LiftedFactorization out;
    out.p = base.p;
    out.prec = prec;
    out.n = base.n;
    out.base = base;
    if (prec == 1) {
        out.factors = base.factors;
        return out;
    }
    out.factors.assign(base.factors.size(), Poly());
    Poly F = Poly::x_pow_minus_one(base.p, prec, base.n);
    split_lift(F, base.factors, 0, base.factors.size(), out.factors);

    Poly prod = Poly::constant(base.p, prec, 1);
    for (const auto& f : out.factors) prod = prod * f;
    require(prod == F, "lifted factor product does not equal X^n - 1");
    return out;
}

LiftedFactorization lift_cyclotomic(std::uint32_t n, std::uint32_t p,
                                    std::uint32_t prec) {
    return lift_factorization(factor_cyclotomic(n, p), prec);
}

Poly pth_power_roots_step(const Poly& h) {
    const std::uint32_t p = h.p();
    const std::uint32_t prec = h.prec();
    if (!h.is_monic())
        throw domain_error(errc::not_monic, "root-power step needs a monic input");
    const int d = h.degree();
    if (p == 2) {
        /* H(X^2) = (-1)^d h(X) h(-X): substituting -X fixes the product, so
           odd coefficients cancel identically */
        std::vector<mpz_class> neg(h.coeffs());
        for (std::size_t i = 1; i < neg.size(); i += 2) neg[i] = -neg[i];
        Poly a = h * Poly(p, prec, std::move(neg));
        std::vector<mpz_class> out(static_cast<std::size_t>(d) + 1);
        const long sign = (d % 2 == 0) ? 1 : -1;
        for (std::size_t i = 0; i < out.size(); ++i) {
            require(ZqInt(p, prec, a.coeff(2 * i + 1)).is_zero(),
                    "odd coefficient survived the even-part extraction");
            out[i] = sign * a.coeff(2 * i);
        }
        return Poly(p, prec, std::move(out));
    }
    /* odd p: multiplication by Y^p on Z[Y]/(h) sends each root to its p-th
       power, so the characteristic polynomial of its matrix is the answer */
    Poly u = divmod_monic(Poly::x_pow(p, prec, p), h).second;
    std::vector<std::vector<mpz_class>> M(
        static_cast<std::size_t>(d),
        std::vector<mpz_class>(static_cast<std::size_t>(d), mpz_class(0)));
    Poly col = u;
    for (int j = 0; j < d; ++j) {
        for (int i = 0; i < d; ++i) M[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = col.coeff(static_cast<std::size_t>(i));
        col = divmod_monic(col.shifted(1), h).second; /* next basis column: u*Y^(j+1) */
    }
    Poly out = charpoly(M, p, prec);
    require(out.is_monic() && out.degree() == d, "characteristic polynomial malformed");
    return out;
}

Poly lift_factor_pth_power(const Poly& f0, std::uint32_t prec) {
    if (f0.prec() != 1)
        throw domain_error(errc::invalid_argument,
                           "alternative lifting starts from a mod-p factor");
    Poly h = f0.embedded(prec);
    for (std::uint32_t step = 1; step < prec; ++step) h = pth_power_roots_step(h);
    require(h.reduced(1) == f0, "alternative lift lost its residue");
    return h;
}

} // namespace zqcode
