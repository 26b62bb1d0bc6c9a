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

#include "zqcode/poly.hpp"

#include <sstream>

namespace zqcode {

Poly::Poly(std::uint32_t p, std::uint32_t prec, std::vector<mpz_class> coeffs)
    : p_(p), prec_(prec), c_(std::move(coeffs)) {
    if (!is_prime_u32(p))
        throw domain_error(errc::invalid_argument, "modulus base must be prime",
                           "p=" + std::to_string(p));
    if (prec == 0)
        throw domain_error(errc::invalid_argument, "precision must be positive");
    mpz_class m = pow_p(p_, prec_);
    for (auto& c : c_) mpz_mod(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    normalize();
}

void Poly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void Poly::check_same_ring(const Poly& o) const {
    if (p_ != o.p_ || prec_ != o.prec_)
        throw domain_error(errc::ring_mismatch, "polynomial operands live in different rings",
                           "p=" + std::to_string(p_) + "/" + std::to_string(o.p_) +
                               " prec=" + std::to_string(prec_) + "/" + std::to_string(o.prec_));
}

Poly Poly::from_ints(std::uint32_t p, std::uint32_t prec, std::initializer_list<long> coeffs) {
    std::vector<mpz_class> v;
    v.reserve(coeffs.size());
    for (long x : coeffs) v.emplace_back(x);
    return Poly(p, prec, std::move(v));
}

Poly Poly::from_ints(std::uint32_t p, std::uint32_t prec, const std::vector<long>& coeffs) {
    std::vector<mpz_class> v;
    v.reserve(coeffs.size());
    for (long x : coeffs) v.emplace_back(x);
    return Poly(p, prec, std::move(v));
}

Poly Poly::constant(std::uint32_t p, std::uint32_t prec, const mpz_class& v) {
    return Poly(p, prec, std::vector<mpz_class>{v});
}

Poly Poly::x_pow(std::uint32_t p, std::uint32_t prec, std::size_t k) {
    std::vector<mpz_class> v(k + 1, mpz_class(0));
    v[k] = 1;
    return Poly(p, prec, std::move(v));
}

Poly Poly::x_pow_minus_one(std::uint32_t p, std::uint32_t prec, std::size_t n) {
    std::vector<mpz_class> v(n + 1, mpz_class(0));
    v[0] = -1;
    v[n] = 1;
    return Poly(p, prec, std::move(v));
}

Poly Poly::operator+(const Poly& o) const {
    check_same_ring(o);
    std::vector<mpz_class> v(std::max(c_.size(), o.c_.size()), mpz_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return Poly(p_, prec_, std::move(v));
}

Poly Poly::operator-(const Poly& o) const {
    check_same_ring(o);
    std::vector<mpz_class> v(std::max(c_.size(), o.c_.size()), mpz_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] -= o.c_[i];
    return Poly(p_, prec_, std::move(v));
}

Poly Poly::operator*(const Poly& o) const {
    check_same_ring(o);
    if (is_zero() || o.is_zero()) return Poly(p_, prec_);
    std::vector<mpz_class> v(c_.size() + o.c_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return Poly(p_, prec_, std::move(v));
}

Poly Poly::operator-() const {
    std::vector<mpz_class> v;
    v.reserve(c_.size());
    for (const auto& c : c_) v.push_back(-c);
    return Poly(p_, prec_, std::move(v));
}

bool Poly::operator==(const Poly& o) const {
    return p_ == o.p_ && prec_ == o.prec_ && c_ == o.c_;
}

Poly Poly::scaled(const mpz_class& s) const {
    std::vector<mpz_class> v;
    v.reserve(c_.size());
    for (const auto& c : c_) v.push_back(c * s);
    return Poly(p_, prec_, std::move(v));
}

Poly Poly::shifted(std::size_t k) const {
    if (is_zero()) return *this;
    std::vector<mpz_class> v(c_.size() + k, mpz_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i + k] = c_[i];
    return Poly(p_, prec_, std::move(v));
}

ZqInt Poly::eval(const ZqInt& x) const {
    if (x.p() != p_ || x.prec() != prec_)
        throw domain_error(errc::ring_mismatch, "evaluation point lives in a different ring");
    return ZqInt(p_, prec_, eval_residue(x.residue()));
}

mpz_class Poly::eval_residue(const mpz_class& x) const {
    mpz_class m = pow_p(p_, prec_);
    mpz_class acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) {
        acc = acc * x + c_[i];
        mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), m.get_mpz_t());
    }
    return acc;
}

Poly Poly::reduced(std::uint32_t new_prec) const {
    if (new_prec > prec_)
        throw domain_error(errc::invalid_argument, "reduction cannot raise precision");
    return Poly(p_, new_prec, c_);
}

Poly Poly::embedded(std::uint32_t new_prec) const {
    if (new_prec < prec_)
        throw domain_error(errc::invalid_argument, "embedding cannot lower precision");
    return Poly(p_, new_prec, c_);
}

Poly Poly::monic_normalized() const {
    if (is_zero()) return *this;
    ZqInt lead(p_, prec_, leading());
    if (!lead.is_unit())
        throw domain_error(errc::not_monic, "leading coefficient is not a unit",
                           "leading=" + leading().get_str());
    return scaled(lead.inverse().residue());
}

Poly Poly::reciprocal() const {
    if (is_zero()) return *this;
    ZqInt c0(p_, prec_, c_[0]);
    if (!c0.is_unit())
        throw domain_error(errc::non_unit_constant_term,
                           "reciprocal requires a unit constant term",
                           "constant=" + c_[0].get_str());
    std::vector<mpz_class> v(c_.rbegin(), c_.rend());
    return Poly(p_, prec_, std::move(v)).monic_normalized();
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly(p_, prec_);
    std::vector<mpz_class> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * static_cast<long>(i);
    return Poly(p_, prec_, std::move(v));
}

std::uint32_t Poly::content_valuation() const {
    std::uint32_t best = prec_;
    for (const auto& c : c_) {
        ZqInt z(p_, prec_, c);
        best = std::min(best, z.valuation());
        if (best == 0) break;
    }
    return best;
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) s += ",";
        s += ZqInt(p_, prec_, c_[i]).balanced().get_str();
    }
    return s;
}

Poly Poly::parse(std::uint32_t p, std::uint32_t prec, const std::string& text) {
    std::vector<mpz_class> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        /* trim spaces */
        std::size_t b = item.find_first_not_of(" \t");
        std::size_t e = item.find_last_not_of(" \t");
        if (b == std::string::npos)
            throw domain_error(errc::invalid_argument, "empty coefficient in polynomial text",
                               text);
        item = item.substr(b, e - b + 1);
        try {
            v.emplace_back(item);
        } catch (const std::invalid_argument&) {
            throw domain_error(errc::invalid_argument, "bad coefficient in polynomial text",
                               item);
        }
    }
    if (v.empty())
        throw domain_error(errc::invalid_argument, "empty polynomial text");
    return Poly(p, prec, std::move(v));
}

Poly mul_mod_xn(const Poly& a, const Poly& b, std::size_t n) {
    if (n == 0) throw domain_error(errc::bad_length, "cyclic length must be positive");
    Poly prod = a * b;
    if (prod.is_zero() || static_cast<std::size_t>(prod.degree()) < n) return prod;
    std::vector<mpz_class> v(n, mpz_class(0));
    for (std::size_t i = 0; i <= static_cast<std::size_t>(prod.degree()); ++i)
        v[i % n] += prod.coeff(i);
    return Poly(a.p(), a.prec(), std::move(v));
}

std::pair<Poly, Poly> divmod_monic(const Poly& a, const Poly& d) {
    if (d.is_zero() || !d.is_monic())
        throw domain_error(errc::not_monic, "division requires a monic divisor");
    if (a.p() != d.p() || a.prec() != d.prec())
        throw domain_error(errc::ring_mismatch, "division operands live in different rings");
    const int dd = d.degree();
    std::vector<mpz_class> rem(a.coeffs());
    if (a.degree() < dd) return {Poly(a.p(), a.prec()), a};
    std::vector<mpz_class> quot(a.degree() - dd + 1, mpz_class(0));
    mpz_class m = pow_p(a.p(), a.prec());
    for (int i = a.degree(); i >= dd; --i) {
        mpz_class c = rem[i];
        mpz_mod(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
        if (c == 0) continue;
        quot[i - dd] = c;
        for (int j = 0; j <= dd; ++j) {
            rem[i - dd + j] -= c * d.coeff(j);
        }
    }
    return {Poly(a.p(), a.prec(), std::move(quot)), Poly(a.p(), a.prec(), std::move(rem))};
}

Poly gcd_mod_p(const Poly& a, const Poly& b) {
    if (a.p() != b.p())
        throw domain_error(errc::ring_mismatch, "gcd operands have different characteristic");
    Poly f = a.prec() == 1 ? a : a.reduced(1);
    Poly g = b.prec() == 1 ? b : b.reduced(1);
    while (!g.is_zero()) {
        Poly r = divmod_monic(f, g.monic_normalized()).second;
        f = g;
        g = r;
    }
    return f.is_zero() ? f : f.monic_normalized();
}

BezoutTriple xgcd_mod_p(const Poly& a, const Poly& b) {
    if (a.p() != b.p())
        throw domain_error(errc::ring_mismatch, "xgcd operands have different characteristic");
    const std::uint32_t p = a.p();
    Poly aa = a.prec() == 1 ? a : a.reduced(1);
    Poly bb = b.prec() == 1 ? b : b.reduced(1);
    Poly r0 = aa, r1 = bb;
    Poly s0 = Poly::constant(p, 1, 1), s1 = Poly(p, 1);
    Poly t0 = Poly(p, 1), t1 = Poly::constant(p, 1, 1);
    while (!r1.is_zero()) {
        ZqInt lc(p, 1, r1.leading());
        mpz_class inv = lc.inverse().residue();
        auto [q_monic, rem] = divmod_monic(r0, r1.scaled(inv));
        Poly q = q_monic.scaled(inv); /* r0 = q*r1 + rem */
        r0 = r1;
        r1 = rem;
        Poly ns = s0 - q * s1;
        s0 = s1;
        s1 = std::move(ns);
        Poly nt = t0 - q * t1;
        t0 = t1;
        t1 = std::move(nt);
    }
    BezoutTriple out{r0, s0, t0};
    if (!out.g.is_zero()) {
        mpz_class inv = ZqInt(p, 1, out.g.leading()).inverse().residue();
        out.g = out.g.scaled(inv);
        out.s = out.s.scaled(inv);
        out.t = out.t.scaled(inv);
    }
    if (out.g.degree() == 0 && bb.degree() >= 1 && aa.degree() >= 1) {
        /* canonical minimal-degree cofactors: s mod b, then t forced exact */
        mpz_class binv = ZqInt(p, 1, bb.leading()).inverse().residue();
        Poly s = divmod_monic(out.s, bb.scaled(binv)).second;
        auto [tq, trem] = divmod_monic(out.g - s * aa, bb.scaled(binv));
        require(trem.is_zero(), "xgcd cofactor correction is not exact");
        out.s = std::move(s);
        out.t = tq.scaled(binv);
    }
    require(out.s * aa + out.t * bb == out.g, "xgcd identity failed");
    return out;
}

ZqInt hensel_root(const Poly& f, std::uint32_t r0, std::uint32_t prec) {
    const std::uint32_t p = f.p();
    if (f.prec() < prec)
        throw domain_error(errc::invalid_argument,
                           "polynomial precision below requested root precision");
    Poly fp = f.prec() == prec ? f : f.reduced(prec);
    ZqInt r(p, prec, static_cast<long>(r0 % p));
    /* simple-root preconditions mod p */
    if (ZqInt(p, prec, fp.eval_residue(r.residue())).valuation() < 1)
        throw domain_error(errc::not_a_root, "value is not a root modulo p",
                           "r0=" + std::to_string(r0));
    Poly fprime = fp.derivative();
    if (!ZqInt(p, prec, fprime.eval_residue(r.residue())).is_unit())
        throw domain_error(errc::not_simple_root, "derivative vanishes modulo p",
                           "r0=" + std::to_string(r0));
    /* Newton with doubling accuracy */
    std::uint32_t acc = 1;
    while (acc < prec) {
        acc = std::min(prec, acc * 2);
        ZqInt fr(p, prec, fp.eval_residue(r.residue()));
        ZqInt fpr(p, prec, fprime.eval_residue(r.residue()));
        r = r - fr * fpr.inverse();
    }
    require(fp.eval_residue(r.residue()) == 0, "refined root postcondition failed");
    return r;
}

ZqInt quadratic_root(std::uint32_t p, long c, std::uint32_t r0, std::uint32_t prec) {
    Poly f = Poly::from_ints(p, prec, {c, -1, 1});
    return hensel_root(f, r0, prec);
}

} // namespace zqcode
