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

#include "zqcode/galois_ring.hpp"

#include "zqcode/errors.hpp"
#include "zqcode/gfp.hpp"
#include "zqcode/hensel.hpp"

namespace zqcode {

namespace {

/* Teichmuller projection inside Z_{p^prec}[X]/(pi): iterating the
   (p^m)-th power map gains one digit of accuracy per round and fixes
   exactly the Teichmuller elements. */
Poly tau_at(Poly x, const Poly& pi, std::uint32_t m) {
    const std::uint32_t p = x.p();
    const std::uint32_t prec = x.prec();
    mpz_class q = pow_p(p, m); /* exponent p^m */
    for (std::uint32_t round = 1; round < prec; ++round) {
        /* x <- x^(p^m) mod pi by square-and-multiply */
        Poly acc = Poly::constant(p, prec, 1);
        Poly base = x;
        mpz_class e = q;
        while (e > 0) {
            if (mpz_odd_p(e.get_mpz_t()))
                acc = divmod_monic(acc * base, pi).second;
            base = divmod_monic(base * base, pi).second;
            e >>= 1;
        }
        x = acc;
    }
    return x;
}

} // namespace

GaloisRing::GaloisRing(std::uint32_t p, std::uint32_t a, std::uint32_t m)
    : p_(p), prec_(a), m_(m) {
    if (m == 0 || a == 0)
        throw domain_error(errc::invalid_argument,
                           "ring degree and precision must be positive");
    std::uint64_t n = 1;
    for (std::uint32_t i = 0; i < m; ++i) n *= p;
    n -= 1; /* p = 2, m = 1 gives n = 1, whose only factor is pi = X - 1 */
    LiftedFactorization lf =
        lift_cyclotomic(static_cast<std::uint32_t>(n), p, a);
    pi_ = lf.factors[lf.coset_index(1)];
    require(pi_.degree() == static_cast<int>(m),
            "primitive modulus has the wrong degree");
}

GaloisRing::GaloisRing(Poly pi)
    : p_(pi.p()), prec_(pi.prec()), m_(static_cast<std::uint32_t>(pi.degree())),
      pi_(std::move(pi)) {
    if (!pi_.is_monic())
        throw domain_error(errc::not_monic, "ring modulus must be monic");
    if (!is_irreducible_mod_p(pi_))
        throw domain_error(errc::invalid_argument,
                           "ring modulus must be irreducible mod p");
}

void GaloisRing::check_element(const Poly& x) const {
    if (x.p() != p_ || x.prec() != prec_)
        throw domain_error(errc::ring_mismatch,
                           "element belongs to a different ring");
    if (x.degree() >= static_cast<int>(m_))
        throw domain_error(errc::invalid_argument,
                           "element representative is not reduced");
}

Poly GaloisRing::root() const {
    return from_poly(Poly::x_pow(p_, prec_, 1));
}

Poly GaloisRing::from_poly(const Poly& f) const {
    if (f.p() != p_ || f.prec() != prec_)
        throw domain_error(errc::ring_mismatch,
                           "polynomial belongs to a different ring");
    return divmod_monic(f, pi_).second;
}

Poly GaloisRing::scalar(const mpz_class& v) const {
    return Poly::constant(p_, prec_, v);
}

Poly GaloisRing::add(const Poly& x, const Poly& y) const {
    check_element(x);
    check_element(y);
    return x + y;
}

Poly GaloisRing::sub(const Poly& x, const Poly& y) const {
    check_element(x);
    check_element(y);
    return x - y;
}

Poly GaloisRing::mul(const Poly& x, const Poly& y) const {
    check_element(x);
    check_element(y);
    return divmod_monic(x * y, pi_).second;
}

Poly GaloisRing::pow(const Poly& x, const mpz_class& e) const {
    check_element(x);
    if (e < 0) return pow(inverse(x), -e);
    Poly acc = one(), base = x;
    mpz_class k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) acc = mul(acc, base);
        base = mul(base, base);
        k >>= 1;
    }
    return acc;
}

bool GaloisRing::is_unit(const Poly& x) const {
    check_element(x);
    return x.content_valuation() == 0;
}

std::uint32_t GaloisRing::valuation(const Poly& x) const {
    check_element(x);
    return x.content_valuation();
}

Poly GaloisRing::inverse(const Poly& x) const {
    if (!is_unit(x))
        throw domain_error(errc::non_unit, "ring element is not invertible");
    /* seed with the inverse mod p, then double accuracy per Newton step */
    BezoutTriple bez = xgcd_mod_p(x, pi_);
    require(bez.g.degree() == 0, "unit reduced to a non-unit mod p");
    Poly v = bez.s.embedded(prec_);
    v = divmod_monic(v, pi_).second;
    const Poly two = Poly::constant(p_, prec_, 2);
    std::uint32_t acc = 1;
    while (acc < prec_) {
        acc = std::min(2 * acc, prec_);
        v = mul(v, two - mul(x, v));
    }
    require(mul(x, v) == one(), "inverse postcondition failed");
    return v;
}

Poly GaloisRing::teichmuller(const Poly& x) const {
    check_element(x);
    Poly t = tau_at(x, pi_, m_);
    require(pow(t, pow_p(p_, m_)) == t, "projection is not a fixed point");
    require((t - x).content_valuation() >= 1,
            "projection changed the residue mod p");
    return t;
}

std::vector<Poly> GaloisRing::padic_coords(const Poly& x) const {
    check_element(x);
    std::vector<Poly> coords;
    coords.reserve(prec_);
    Poly u = x;
    Poly pi_cur = pi_;
    for (std::uint32_t r = 0; r < prec_; ++r) {
        const std::uint32_t cur = prec_ - r;
        Poly c = tau_at(u, pi_cur, m_);
        if (r + 1 < prec_) {
            /* (u - c)/p at one digit less precision */
            Poly diff = u - c;
            require(diff.content_valuation() >= 1,
                    "digit extraction left a unit remainder");
            std::vector<mpz_class> v(diff.coeffs());
            for (auto& cv : v) mpz_divexact_ui(cv.get_mpz_t(), cv.get_mpz_t(), p_);
            pi_cur = pi_cur.reduced(cur - 1);
            u = Poly(p_, cur - 1, std::move(v));
        }
        /* re-lift the digit to full precision via its residue */
        Poly lifted = tau_at(c.embedded(prec_), pi_, m_);
        coords.push_back(std::move(lifted));
    }
    /* defining property: x = sum p^r c_r */
    Poly sum = zero();
    for (std::uint32_t r = 0; r < prec_; ++r)
        sum = sum + coords[r].scaled(pow_p(p_, r));
    require(sum == x, "digit expansion does not reproduce the element");
    return coords;
}

Poly GaloisRing::frobenius(const Poly& x) const {
    check_element(x);
    /* substitute X -> X^p: coefficients are fixed, the root is raised to the
       p-th power */
    Poly xp = divmod_monic(Poly::x_pow(p_, prec_, p_), pi_).second;
    Poly acc = zero();
    for (std::size_t i = x.coeffs().size(); i-- > 0;) {
        acc = divmod_monic(acc * xp, pi_).second;
        acc = acc + Poly::constant(p_, prec_, x.coeff(i));
    }
    return acc;
}

std::vector<Poly> GaloisRing::teichmuller_set() const {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < m_; ++i) count *= p_;
    std::vector<Poly> out;
    out.reserve(count);
    out.push_back(zero());
    Poly xi = root();
    Poly cur = one();
    for (std::uint64_t j = 0; j + 1 < count; ++j) {
        out.push_back(cur);
        cur = mul(cur, xi);
    }
    require(cur == one(), "root does not have the full multiplicative order");
    return out;
}

} // namespace zqcode
