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

#include "zqcode/zq.hpp"

namespace zqcode {

const char* errc_name(errc code) noexcept {
    switch (code) {
        case errc::non_unit: return "NonUnit";
        case errc::not_a_root: return "NotARoot";
        case errc::not_simple_root: return "NotSimpleRoot";
        case errc::no_square_root: return "NoSquareRoot";
        case errc::ring_mismatch: return "RingMismatch";
        case errc::not_monic: return "NotMonic";
        case errc::non_unit_constant_term: return "NonUnitConstantTerm";
        case errc::not_coprime: return "NotCoprime";
        case errc::infinite_mode_unsupported: return "InfiniteModeUnsupported";
        case errc::budget_exceeded: return "BudgetExceeded";
        case errc::bad_length: return "BadLength";
        case errc::invalid_argument: return "InvalidArgument";
        case errc::internal_check_failed: return "InternalCheckFailed";
    }
    return "UnknownError";
}

void require(bool condition, const std::string& message) {
    if (!condition) throw domain_error(errc::internal_check_failed, message);
}

bool is_prime_u32(std::uint32_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

mpz_class pow_p(std::uint32_t p, std::uint32_t e) {
    mpz_class m;
    mpz_ui_pow_ui(m.get_mpz_t(), p, e);
    return m;
}

ZqInt::ZqInt(std::uint32_t p, std::uint32_t prec, const mpz_class& value)
    : p_(p), prec_(prec), r_(value) {
    if (!is_prime_u32(p))
        throw domain_error(errc::invalid_argument, "modulus base must be prime",
                           "p=" + std::to_string(p));
    if (prec == 0)
        throw domain_error(errc::invalid_argument, "precision must be positive");
    mpz_class m = modulus();
    mpz_mod(r_.get_mpz_t(), r_.get_mpz_t(), m.get_mpz_t());
}

void ZqInt::check_same_ring(const ZqInt& o) const {
    if (p_ != o.p_ || prec_ != o.prec_)
        throw domain_error(errc::ring_mismatch, "operands live in different rings",
                           "p=" + std::to_string(p_) + "/" + std::to_string(o.p_) +
                               " prec=" + std::to_string(prec_) + "/" + std::to_string(o.prec_));
}

bool ZqInt::is_unit() const {
    return mpz_divisible_ui_p(r_.get_mpz_t(), p_) == 0;
}

std::uint32_t ZqInt::valuation() const {
    if (r_ == 0) return prec_;
    std::uint32_t v = 0;
    mpz_class t = r_;
    while (v < prec_ && mpz_divisible_ui_p(t.get_mpz_t(), p_)) {
        mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), p_);
        ++v;
    }
    return v;
}

ZqInt ZqInt::operator+(const ZqInt& o) const {
    check_same_ring(o);
    return ZqInt(p_, prec_, r_ + o.r_);
}

ZqInt ZqInt::operator-(const ZqInt& o) const {
    check_same_ring(o);
    return ZqInt(p_, prec_, r_ - o.r_);
}

ZqInt ZqInt::operator*(const ZqInt& o) const {
    check_same_ring(o);
    return ZqInt(p_, prec_, r_ * o.r_);
}

ZqInt ZqInt::operator-() const { return ZqInt(p_, prec_, -r_); }

bool ZqInt::operator==(const ZqInt& o) const {
    return p_ == o.p_ && prec_ == o.prec_ && r_ == o.r_;
}

ZqInt ZqInt::inverse() const { return unit_inverse(*this); }

ZqInt ZqInt::reduced(std::uint32_t new_prec) const {
    if (new_prec > prec_)
        throw domain_error(errc::invalid_argument, "reduction cannot raise precision");
    return ZqInt(p_, new_prec, r_);
}

ZqInt ZqInt::embedded(std::uint32_t new_prec) const {
    if (new_prec < prec_)
        throw domain_error(errc::invalid_argument, "embedding cannot lower precision");
    return ZqInt(p_, new_prec, r_);
}

ZqInt ZqInt::shifted_down(std::uint32_t k) const {
    if (k == 0) return *this;
    if (valuation() < k)
        throw domain_error(errc::invalid_argument, "residue not divisible by p^k",
                           "k=" + std::to_string(k));
    mpz_class q = r_ / pow_p(p_, k);
    return ZqInt(p_, prec_ - k, q);
}

std::vector<std::uint32_t> ZqInt::digits() const {
    std::vector<std::uint32_t> out(prec_);
    mpz_class t = r_;
    for (std::uint32_t i = 0; i < prec_; ++i) {
        out[i] = static_cast<std::uint32_t>(mpz_fdiv_ui(t.get_mpz_t(), p_));
        mpz_fdiv_q_ui(t.get_mpz_t(), t.get_mpz_t(), p_);
    }
    return out;
}

std::string ZqInt::digit_string() const {
    std::string s;
    for (std::uint32_t d : digits()) {
        if (p_ <= 10) {
            s.push_back(static_cast<char>('0' + d));
        } else {
            if (!s.empty()) s.push_back(',');
            s += std::to_string(d);
        }
    }
    return s;
}

mpz_class ZqInt::balanced() const {
    mpz_class m = modulus();
    mpz_class half = m / 2;
    /* representative in (-m/2, m/2]; the tie m/2 (p = 2 only) stays positive */
    if (r_ > half) return r_ - m;
    return r_;
}

ZqInt unit_inverse(const ZqInt& u) {
    if (!u.is_unit())
        throw domain_error(errc::non_unit, "inverse of a non-unit residue",
                           "value=" + u.residue().get_str());
    const std::uint32_t p = u.p(), prec = u.prec();
    /* invert the first digit mod p, then Newton: v <- v(2 - uv) doubles accuracy */
    mpz_class x0;
    mpz_class pp(p);
    mpz_class d0 = u.residue() % p;
    mpz_invert(x0.get_mpz_t(), d0.get_mpz_t(), pp.get_mpz_t());
    std::uint32_t acc = 1;
    mpz_class v = x0;
    const mpz_class m = u.modulus();
    while (acc < prec) {
        acc = std::min(prec, acc * 2);
        mpz_class mod_acc = pow_p(p, acc);
        v = v * (2 - u.residue() * v);
        mpz_mod(v.get_mpz_t(), v.get_mpz_t(), mod_acc.get_mpz_t());
    }
    ZqInt result(p, prec, v);
    require((result * u).residue() == 1, "inverse postcondition failed");
    return result;
}

ZqInt sqrt_2adic(const ZqInt& u) {
    if (u.p() != 2)
        throw domain_error(errc::no_square_root, "2-adic square root requires p = 2",
                           "p=" + std::to_string(u.p()));
    const std::uint32_t prec = u.prec();
    if (!u.is_unit())
        throw domain_error(errc::no_square_root, "square root defined for units only",
                           "value=" + u.residue().get_str());
    /* squares among the odd residues are exactly those ≡ 1 mod min(8, 2^prec) */
    mpz_class low = u.residue() % pow_p(2, std::min<std::uint32_t>(prec, 3));
    if (low != 1)
        throw domain_error(errc::no_square_root, "unit is not ≡ 1 mod 8",
                           "value=" + u.residue().get_str());
    if (prec <= 2) return ZqInt(2, prec, 1);

    /* write s = 1 + 4t: s^2 = u  <=>  2t^2 + t - (u-1)/8 = 0, whose t-derivative
       4t + 1 is odd, so the digit-by-digit Newton step applies. */
    const std::uint32_t tprec = prec - 2; /* t determined mod 2^(prec-3); compute one extra */
    mpz_class c = (u.residue() - 1) / 8;
    mpz_class t = c % 2; /* root of t + c mod 2 */
    std::uint32_t acc = 1;
    while (acc < tprec) {
        acc = std::min(tprec, acc * 2);
        mpz_class mod_acc = pow_p(2, acc);
        /* Newton: t <- t - g(t) * g'(t)^{-1} mod 2^acc */
        mpz_class g = 2 * t * t + t - c;
        mpz_class gp = 4 * t + 1;
        mpz_class gpinv;
        mpz_invert(gpinv.get_mpz_t(), gp.get_mpz_t(), mod_acc.get_mpz_t());
        t = t - g * gpinv;
        mpz_mod(t.get_mpz_t(), t.get_mpz_t(), mod_acc.get_mpz_t());
    }
    mpz_class s = 1 + 4 * t;
    /* s is determined mod 2^(prec-1): the smaller representative mod 2^prec */
    mpz_class half_mod = pow_p(2, prec - 1);
    mpz_mod(s.get_mpz_t(), s.get_mpz_t(), half_mod.get_mpz_t());
    ZqInt result(2, prec, s);
    require((result * result).residue() == u.residue(), "square root postcondition failed");
    return result;
}

} // namespace zqcode
