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

#ifndef ZQCODE_POLY_HPP
#define ZQCODE_POLY_HPP

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "zqcode/zq.hpp"

namespace zqcode {

/*
   Dense polynomial over Z_{p^prec}, coefficients stored constant term first.
   The text format used by the CLI matches this order: "-1,1,2,1" denotes
   X^3 + 2X^2 + X - 1.
*/
class Poly {
  public:
    Poly() : p_(2), prec_(1) {}
    Poly(std::uint32_t p, std::uint32_t prec) : p_(p), prec_(prec) {}
    Poly(std::uint32_t p, std::uint32_t prec, std::vector<mpz_class> coeffs);

    static Poly from_ints(std::uint32_t p, std::uint32_t prec, std::initializer_list<long> coeffs);
    static Poly from_ints(std::uint32_t p, std::uint32_t prec, const std::vector<long>& coeffs);
    static Poly constant(std::uint32_t p, std::uint32_t prec, const mpz_class& v);
    static Poly x_pow(std::uint32_t p, std::uint32_t prec, std::size_t k); /* X^k */
    static Poly x_pow_minus_one(std::uint32_t p, std::uint32_t prec, std::size_t n);

    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t prec() const noexcept { return prec_; }

    /* degree of the zero polynomial is -1 */
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    mpz_class coeff(std::size_t i) const { return i < c_.size() ? c_[i] : mpz_class(0); }
    const std::vector<mpz_class>& coeffs() const noexcept { return c_; }
    mpz_class leading() const { return is_zero() ? mpz_class(0) : c_.back(); }
    bool is_monic() const { return !is_zero() && c_.back() == 1; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly scaled(const mpz_class& s) const;
    Poly shifted(std::size_t k) const; /* multiply by X^k */

    ZqInt eval(const ZqInt& x) const;
    mpz_class eval_residue(const mpz_class& x) const; /* mod p^prec */

    /* same coefficients at a different precision */
    Poly reduced(std::uint32_t new_prec) const;
    Poly embedded(std::uint32_t new_prec) const;

    /* monic normalization: divide by the (unit) leading coefficient */
    Poly monic_normalized() const;

    /* X^deg * f(1/X), monic-normalized; requires unit constant term */
    Poly reciprocal() const;

    Poly derivative() const;

    /* minimum coefficient p-valuation, capped at prec (zero poly -> prec) */
    std::uint32_t content_valuation() const;

    std::string to_string() const;                 /* balanced, comma-separated, constant first */
    static Poly parse(std::uint32_t p, std::uint32_t prec, const std::string& text);

  private:
    std::uint32_t p_;
    std::uint32_t prec_;
    std::vector<mpz_class> c_; /* normalized: no leading zeros */

    void normalize();
    void check_same_ring(const Poly& o) const;
};

/* a*b reduced modulo X^n - 1 (cyclic convolution) */
Poly mul_mod_xn(const Poly& a, const Poly& b, std::size_t n);

/* division with remainder by a monic divisor (errc::not_monic otherwise) */
std::pair<Poly, Poly> divmod_monic(const Poly& a, const Poly& d);

/* gcd of the mod-p projections, monic unless zero */
Poly gcd_mod_p(const Poly& a, const Poly& b);

/* extended gcd of the mod-p projections: g = s*a + t*b with g monic (or
   zero); when g = 1 and both inputs have positive degree, deg s < deg b and
   deg t < deg a */
struct BezoutTriple {
    Poly g, s, t;
};
BezoutTriple xgcd_mod_p(const Poly& a, const Poly& b);

/*
   Root refinement: given f with f(r0) ≡ 0 (mod p) and f'(r0) a unit
   (errc::not_a_root / errc::not_simple_root otherwise), returns the unique
   root of f congruent to r0 modulo p, at precision prec.  The coefficients
   of f are read at precision >= prec.
*/
ZqInt hensel_root(const Poly& f, std::uint32_t r0, std::uint32_t prec);

/* root of X^2 - X + c congruent to r0 mod p, at precision prec */
ZqInt quadratic_root(std::uint32_t p, long c, std::uint32_t r0, std::uint32_t prec);

} // namespace zqcode

#endif
