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

#include "zqcode/code.hpp"

#include <algorithm>
#include <utility>

#include "zqcode/errors.hpp"

namespace zqcode {

namespace {

Poly fold(const Poly& v, std::size_t n) {
    if (v.degree() < static_cast<int>(n))
        return v;
    return divmod_monic(v, Poly::x_pow_minus_one(v.p(), v.prec(), n)).second;
}

mpz_class dot(const std::vector<mpz_class>& u, const std::vector<mpz_class>& v,
              const mpz_class& q) {
    mpz_class acc = 0;
    for (std::size_t t = 0; t < u.size(); ++t)
        acc += u[t] * v[t];
    mpz_class r;
    mpz_mod(r.get_mpz_t(), acc.get_mpz_t(), q.get_mpz_t());
    return r;
}

} // namespace

/* ---------------------------------------------------------------- context */

LiftedContext::LiftedContext(std::uint32_t n, std::uint32_t p, std::uint32_t prec) {
    lift_ = lift_cyclotomic(n, p, prec);
    cofactors_.reserve(lift_.count());
    const Poly xn1 = modulus();
    for (std::size_t i = 0; i < lift_.count(); ++i) {
        Poly co = Poly::constant(p, prec, 1);
        for (std::size_t j = 0; j < lift_.count(); ++j)
            if (j != i)
                co = co * lift_.factors[j];
        require(co * lift_.factors[i] == xn1, "cofactor times factor must be X^n - 1");
        cofactors_.push_back(std::move(co));
    }
}

ContextPtr make_context(std::uint32_t n, std::uint32_t p, std::uint32_t prec) {
    return std::make_shared<const LiftedContext>(n, p, prec);
}

/* ------------------------------------------------------------------ types */

std::string TypeProfile::to_string() const {
    if (levels.empty())
        return "1^0";
    std::string out;
    for (const TypeLevel& lv : levels) {
        if (!out.empty())
            out += ' ';
        out += pow_p(p, lv.m).get_str();
        out += '^';
        out += std::to_string(lv.k);
    }
    return out;
}

std::uint64_t TypeProfile::size_exponent() const {
    std::uint64_t e = 0;
    for (const TypeLevel& lv : levels)
        e += static_cast<std::uint64_t>(cap - lv.m) * lv.k;
    return e;
}

std::vector<std::uint32_t> TypeProfile::blocks_by_exponent() const {
    std::vector<std::uint32_t> blocks(cap + 1, 0);
    std::uint32_t used = 0;
    for (const TypeLevel& lv : levels) {
        blocks.at(lv.m) += lv.k;
        used += lv.k;
    }
    require(used <= n, "staircase wider than the code length");
    blocks[cap] = n - used;
    return blocks;
}

/* ------------------------------------------------------------------ codes */

CyclicCode::CyclicCode(ContextPtr ctx, std::vector<std::uint32_t> exps, bool infinite_mode)
    : ctx_(std::move(ctx)), infinite_(infinite_mode), exps_(std::move(exps)) {
    derive_chain();
}

CyclicCode CyclicCode::from_exponents(ContextPtr ctx, std::vector<std::uint32_t> exponents,
                                      bool infinite_mode) {
    if (!ctx)
        throw domain_error(errc::invalid_argument, "null context");
    if (exponents.size() != ctx->count())
        throw domain_error(errc::invalid_argument, "one exponent per factor expected");
    for (std::uint32_t m : exponents)
        if (m > ctx->prec())
            throw domain_error(errc::invalid_argument, "exponent exceeds the ring precision");
    return CyclicCode(std::move(ctx), std::move(exponents), infinite_mode);
}

CyclicCode CyclicCode::from_generators(ContextPtr ctx, const std::vector<Poly>& gens,
                                       bool infinite_mode) {
    if (!ctx)
        throw domain_error(errc::invalid_argument, "null context");
    std::vector<std::uint32_t> exps(ctx->count(), ctx->prec());
    for (const Poly& g : gens) {
        if (g.p() != ctx->p() || g.prec() != ctx->prec())
            throw domain_error(errc::ring_mismatch, "generator is not over the context ring");
        const Poly gf = fold(g, ctx->n());
        for (std::size_t i = 0; i < ctx->count(); ++i) {
            const Poly rem = divmod_monic(gf, ctx->factor(i)).second;
            exps[i] = std::min(exps[i], rem.content_valuation());
        }
    }
    return CyclicCode(std::move(ctx), std::move(exps), infinite_mode);
}

void CyclicCode::derive_chain() {
    const std::uint32_t cap = prec();
    Poly prev = ctx_->modulus();
    for (std::uint32_t j = 0; j < cap; ++j) {
        Poly fj = Poly::constant(p(), cap, 1);
        for (std::size_t i = 0; i < ctx_->count(); ++i)
            if (exps_[i] > j)
                fj = fj * ctx_->factor(i);
        if (fj != prev) {
            if (!chain_.empty()) {
                require(fj.degree() < chain_.back().f.degree(),
                        "chain degrees must strictly decrease");
                require(divmod_monic(chain_.back().f, fj).second.is_zero() || fj.degree() == 0,
                        "each chain polynomial must divide its predecessor");
            }
            chain_.push_back(ChainLevel{j, fj});
            prev = std::move(fj);
        }
    }
}

TypeProfile CyclicCode::type_profile() const {
    TypeProfile tp;
    tp.p = p();
    tp.cap = prec();
    tp.n = n();
    int prev_deg = static_cast<int>(n());
    for (const ChainLevel& lv : chain_) {
        const int d = lv.f.is_zero() ? 0 : lv.f.degree();
        require(prev_deg > d, "staircase block must be nonempty");
        tp.levels.push_back(TypeLevel{lv.m, static_cast<std::uint32_t>(prev_deg - d)});
        prev_deg = d;
    }
    return tp;
}

std::string CyclicCode::ideal_string() const {
    std::string out;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] == 0)
            continue;
        if (!out.empty())
            out += ' ';
        out += "P_" + std::to_string(i);
        if (infinite_ && exps_[i] == prec())
            out += "^inf";
        else if (exps_[i] > 1)
            out += '^' + std::to_string(exps_[i]);
    }
    return out.empty() ? "1" : out;
}

std::vector<Poly> CyclicCode::generator_rows() const {
    std::vector<Poly> rows;
    int prev_deg = static_cast<int>(n());
    for (const ChainLevel& lv : chain_) {
        const Poly scaled = lv.f.scaled(pow_p(p(), lv.m));
        const int d = lv.f.degree();
        for (int i = 0; i < prev_deg - d; ++i)
            rows.push_back(scaled.shifted(static_cast<std::size_t>(i)));
        prev_deg = d;
    }
    return rows;
}

std::vector<std::vector<mpz_class>> CyclicCode::generator_matrix() const {
    std::vector<std::vector<mpz_class>> out;
    for (const Poly& row : generator_rows()) {
        std::vector<mpz_class> v(n());
        for (std::size_t t = 0; t < n(); ++t)
            v[t] = row.coeff(t);
        out.push_back(std::move(v));
    }
    return out;
}

CyclicCode CyclicCode::dual() const {
    if (infinite_)
        for (std::uint32_t e : exps_)
            if (e != 0 && e != prec())
                throw domain_error(
                    errc::infinite_mode_unsupported,
                    "dual exponents of a mixed limit ideal are not representable",
                    "ideal " + ideal_string());
    std::vector<std::uint32_t> dexps(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i)
        dexps[i] = prec() - exps_[ctx_->reciprocal_index(i)];
    CyclicCode d(ctx_, std::move(dexps), infinite_);

    const mpz_class q = pow_p(p(), prec());
    const auto rows = generator_matrix();
    const auto drows = d.generator_matrix();
    for (const auto& u : rows)
        for (const auto& v : drows)
            require(dot(u, v, q) == 0, "dual generator rows must be orthogonal");
    require(size_exponent() + d.size_exponent() ==
                static_cast<std::uint64_t>(prec()) * n(),
            "code and dual sizes must multiply to the full space");
    return d;
}

Poly CyclicCode::principal_generator() const {
    Poly g(p(), prec());
    for (const ChainLevel& lv : chain_)
        g = g + lv.f.scaled(pow_p(p(), lv.m));
    CyclicCode regen = from_generators(ctx_, {g}, infinite_);
    require(regen.exponents() == exps_, "single generator must span the same ideal");
    return g;
}

std::optional<Poly> CyclicCode::idempotent_generator() const {
    for (std::uint32_t m : exps_)
        if (m != 0 && m != prec())
            return std::nullopt;
    Poly e(p(), prec());
    const Poly one = Poly::constant(p(), prec(), 1);
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] == 0)
            e = e + (one - component_idempotent(*ctx_, i));
    e = fold(e, n());
    require(mul_mod_xn(e, e, n()) == e, "idempotent generator must square to itself");
    CyclicCode regen = from_generators(ctx_, {e}, infinite_);
    require(regen.exponents() == exps_, "idempotent must span the same ideal");
    return e;
}

std::optional<std::vector<mpz_class>> CyclicCode::staircase_coordinates(const Poly& v) const {
    if (v.p() != p() || v.prec() != prec())
        throw domain_error(errc::ring_mismatch, "vector is not over the code ring");
    const Poly vf = fold(v, n());
    const mpz_class q = pow_p(p(), prec());
    std::vector<mpz_class> c(n(), 0);
    for (std::size_t t = 0; t < n(); ++t)
        c[t] = vf.coeff(t);

    std::vector<mpz_class> coords;
    std::size_t offset = 0;
    int prev_deg = static_cast<int>(n());
    for (const ChainLevel& lv : chain_) {
        const int d = lv.f.degree();
        const std::size_t k = static_cast<std::size_t>(prev_deg - d);
        coords.resize(offset + k, 0);
        const mpz_class pm = pow_p(p(), lv.m);
        for (int t = prev_deg - 1; t >= d; --t) {
            mpz_class rem = c[static_cast<std::size_t>(t)] % pm;
            if (rem != 0)
                return std::nullopt;
            mpz_class coef = c[static_cast<std::size_t>(t)] / pm;
            const std::size_t shift = static_cast<std::size_t>(t - d);
            if (coef != 0) {
                for (int s = 0; s <= d; ++s) {
                    mpz_class& slot = c[shift + static_cast<std::size_t>(s)];
                    slot -= coef * pm * lv.f.coeff(static_cast<std::size_t>(s));
                    mpz_mod(slot.get_mpz_t(), slot.get_mpz_t(), q.get_mpz_t());
                }
            }
            coords[offset + shift] = coef;
        }
        offset += k;
        prev_deg = d;
    }
    for (const mpz_class& rest : c)
        if (rest != 0)
            return std::nullopt;
    return coords;
}

bool CyclicCode::contains(const Poly& v) const {
    if (v.p() != p() || v.prec() != prec())
        throw domain_error(errc::ring_mismatch, "vector is not over the code ring");
    const Poly vf = fold(v, n());
    bool by_valuation = true;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        const Poly rem = divmod_monic(vf, ctx_->factor(i)).second;
        if (rem.content_valuation() < exps_[i]) {
            by_valuation = false;
            break;
        }
    }
    const bool by_peeling = staircase_coordinates(vf).has_value();
    require(by_valuation == by_peeling, "membership routes must agree");
    return by_valuation;
}

bool CyclicCode::contains_vector(const std::vector<mpz_class>& v) const {
    if (v.size() != n())
        throw domain_error(errc::invalid_argument, "vector length must equal the code length");
    return contains(Poly(p(), prec(), v));
}

bool CyclicCode::operator==(const CyclicCode& o) const {
    return n() == o.n() && p() == o.p() && prec() == o.prec() &&
           infinite_ == o.infinite_ && exps_ == o.exps_;
}

/* ------------------------------------------------------------ idempotents */

Poly component_idempotent(const LiftedContext& ctx, std::size_t i) {
    const std::uint32_t p = ctx.p();
    const std::uint32_t prec = ctx.prec();
    const std::size_t n = ctx.n();
    const Poly& pi = ctx.factor(i);
    const Poly& cof = ctx.cofactor(i);

    BezoutTriple bz = xgcd_mod_p(pi, cof);
    require(bz.g == Poly::constant(p, 1, 1), "factor and cofactor must be coprime mod p");

    /* Digit-by-digit route: refine the mod-p idempotent one power at a time. */
    Poly e = mul_mod_xn(bz.s.embedded(prec), pi, n);
    const Poly one = Poly::constant(p, prec, 1);
    for (std::uint32_t r = 1; r < prec; ++r) {
        const Poly defect = mul_mod_xn(e, e, n) - e;
        require(defect.content_valuation() >= r, "idempotent defect must shrink");
        std::vector<mpz_class> hc(static_cast<std::size_t>(defect.degree()) + 1);
        const mpz_class pr = pow_p(p, r);
        for (std::size_t t = 0; t < hc.size(); ++t)
            mpz_divexact(hc[t].get_mpz_t(), defect.coeff(t).get_mpz_t(), pr.get_mpz_t());
        Poly h(p, prec, std::move(hc));
        const Poly theta = p == 2 ? h : mul_mod_xn(h, one - e.scaled(2), n);
        e = e + theta.scaled(pr);
        e = fold(e, n);
    }
    require((mul_mod_xn(e, e, n) - e).is_zero(), "lifted idempotent must square to itself");

    /* Quadratic route: refine the Bezout pair, then read the idempotent off it. */
    Poly s2 = bz.s.embedded(prec), t2 = bz.t.embedded(prec);
    for (int guard = 0;; ++guard) {
        const Poly b = mul_mod_xn(s2, pi, n) + mul_mod_xn(t2, cof, n) - one;
        if (b.is_zero())
            break;
        require(guard < 64, "Bezout refinement must terminate");
        const Poly corr = one - b;
        s2 = mul_mod_xn(s2, corr, n);
        t2 = mul_mod_xn(t2, corr, n);
    }
    const Poly e2 = mul_mod_xn(s2, pi, n);
    require(e2 == e, "both idempotent constructions must agree");
    return e;
}

/* -------------------------------------------------------------- extension */

ExtendedCode::ExtendedCode(CyclicCode base, Kind kind, ZqInt param)
    : base_(std::move(base)), kind_(kind), param_(std::move(param)) {}

ExtendedCode ExtendedCode::zero_sum(CyclicCode base) {
    ZqInt one = ZqInt::one(base.p(), base.prec());
    return ExtendedCode(std::move(base), Kind::zero_sum, std::move(one));
}

ExtendedCode ExtendedCode::append_constant(CyclicCode base, const ZqInt& digit) {
    if (digit.p() != base.p() || digit.prec() != base.prec())
        throw domain_error(errc::ring_mismatch, "check digit is not over the code ring");
    return ExtendedCode(std::move(base), Kind::append_constant, digit);
}

ExtendedCode ExtendedCode::scaled_zero_sum(CyclicCode base, const ZqInt& scale) {
    if (scale.p() != base.p() || scale.prec() != base.prec())
        throw domain_error(errc::ring_mismatch, "check scale is not over the code ring");
    return ExtendedCode(std::move(base), Kind::scaled_zero_sum, scale);
}

ExtendedCode ExtendedCode::qr_self_dual(CyclicCode base) {
    if (base.p() != 2 || base.n() % 8 != 7)
        throw domain_error(errc::bad_length,
                           "self-dual check digit needs p = 2 and length 7 mod 8");
    const ZqInt nval(2, base.prec(), static_cast<long>(base.n()));
    const ZqInt minus_inv_n = -unit_inverse(nval);
    return scaled_zero_sum(std::move(base), sqrt_2adic(minus_inv_n));
}

ZqInt ExtendedCode::level_digit(std::size_t level) const {
    const ChainLevel& lv = base_.chain().at(level);
    const std::uint32_t p = base_.p(), prec = base_.prec();
    const ZqInt pm(p, prec, pow_p(p, lv.m));
    switch (kind_) {
    case Kind::append_constant:
        return param_ * pm;
    case Kind::zero_sum:
        return -(lv.f.eval(ZqInt::one(p, prec)) * pm);
    case Kind::scaled_zero_sum:
        return -(lv.f.eval(ZqInt::one(p, prec)) * pm * param_);
    }
    throw domain_error(errc::internal_check_failed, "unknown extension kind");
}

std::vector<std::vector<mpz_class>> ExtendedCode::generator_matrix() const {
    std::vector<std::vector<mpz_class>> rows = base_.generator_matrix();
    std::size_t row = 0;
    int prev_deg = static_cast<int>(base_.n());
    for (std::size_t level = 0; level < base_.chain().size(); ++level) {
        const int d = base_.chain()[level].f.degree();
        const mpz_class digit = level_digit(level).residue();
        for (int i = 0; i < prev_deg - d; ++i)
            rows.at(row++).push_back(digit);
        prev_deg = d;
    }
    require(row == rows.size(), "every row carries a check digit");
    return rows;
}

bool ExtendedCode::contains(const std::vector<mpz_class>& v) const {
    if (v.size() != length())
        throw domain_error(errc::invalid_argument, "vector length must be n + 1");
    std::vector<mpz_class> head(v.begin(), v.end() - 1);
    const auto coords = base_.staircase_coordinates(Poly(base_.p(), base_.prec(), head));
    if (!coords.has_value())
        return false;
    const mpz_class q = pow_p(base_.p(), base_.prec());
    mpz_class expected = 0;
    std::size_t row = 0;
    int prev_deg = static_cast<int>(base_.n());
    for (std::size_t level = 0; level < base_.chain().size(); ++level) {
        const int d = base_.chain()[level].f.degree();
        const mpz_class digit = level_digit(level).residue();
        for (int i = 0; i < prev_deg - d; ++i)
            expected += (*coords)[row++] * digit;
        prev_deg = d;
    }
    mpz_mod(expected.get_mpz_t(), expected.get_mpz_t(), q.get_mpz_t());
    mpz_class given;
    mpz_mod(given.get_mpz_t(), v.back().get_mpz_t(), q.get_mpz_t());
    return expected == given;
}

bool ExtendedCode::same_codewords(const ExtendedCode& o) const {
    if (length() != o.length() || base_.p() != o.base_.p() || base_.prec() != o.base_.prec())
        return false;
    for (const auto& row : generator_matrix())
        if (!o.contains(row))
            return false;
    for (const auto& row : o.generator_matrix())
        if (!contains(row))
            return false;
    return true;
}

bool ExtendedCode::is_self_dual() const {
    if (2 * base_.size_exponent() !=
        static_cast<std::uint64_t>(base_.prec()) * length())
        return false;
    const mpz_class q = pow_p(base_.p(), base_.prec());
    const auto rows = generator_matrix();
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = i; j < rows.size(); ++j)
            if (dot(rows[i], rows[j], q) != 0)
                return false;
    return true;
}

/* -------------------------------------------------------------- monomials */

Monomial Monomial::identity(std::size_t len) {
    Monomial m;
    m.source.resize(len);
    for (std::size_t j = 0; j < len; ++j)
        m.source[j] = j;
    m.sign.assign(len, 1);
    return m;
}

Monomial& Monomial::with_cycle(const std::vector<std::size_t>& cycle) {
    for (std::size_t t = 0; t < cycle.size(); ++t)
        source.at(cycle[t]) = cycle[(t + 1) % cycle.size()];
    return *this;
}

Monomial& Monomial::with_negations(const std::vector<std::size_t>& coords) {
    for (std::size_t c : coords)
        sign.at(c) = -sign.at(c);
    return *this;
}

std::vector<mpz_class> Monomial::apply(const std::vector<mpz_class>& v,
                                       const mpz_class& q) const {
    require(v.size() == source.size(), "monomial length must match the vector");
    std::vector<mpz_class> w(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) {
        w[j] = sign[j] * v[source[j]];
        mpz_mod(w[j].get_mpz_t(), w[j].get_mpz_t(), q.get_mpz_t());
    }
    return w;
}

bool preserves(const CyclicCode& code, const Monomial& mono) {
    const mpz_class q = pow_p(code.p(), code.prec());
    for (const auto& row : code.generator_matrix())
        if (!code.contains_vector(mono.apply(row, q)))
            return false;
    return true;
}

bool preserves(const ExtendedCode& code, const Monomial& mono) {
    const mpz_class q = pow_p(code.base().p(), code.base().prec());
    for (const auto& row : code.generator_matrix())
        if (!code.contains(mono.apply(row, q)))
            return false;
    return true;
}

} // namespace zqcode
