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

#ifndef ZQCODE_ZQ_HPP
#define ZQCODE_ZQ_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "zqcode/errors.hpp"

namespace zqcode {

bool is_prime_u32(std::uint32_t n) noexcept;

/* p^e as an exact integer. */
mpz_class pow_p(std::uint32_t p, std::uint32_t e);

/*
   Truncated p-adic integer: a residue modulo p^prec.  The explicit precision
   field is what models computations in the projective limit Z_{p^infinity};
   a value "at precision a" stands for any p-adic integer with these low-order
   a digits.  Digits are indexed least-significant first throughout.
*/
class ZqInt {
  public:
    /* Needed by containers; represents 0 mod 2. */
    ZqInt() : p_(2), prec_(1), r_(0) {}

    ZqInt(std::uint32_t p, std::uint32_t prec, const mpz_class& value);
    ZqInt(std::uint32_t p, std::uint32_t prec, long value)
        : ZqInt(p, prec, mpz_class(value)) {}

    static ZqInt zero(std::uint32_t p, std::uint32_t prec) { return ZqInt(p, prec, 0L); }
    static ZqInt one(std::uint32_t p, std::uint32_t prec) { return ZqInt(p, prec, 1L); }

    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t prec() const noexcept { return prec_; }
    const mpz_class& residue() const noexcept { return r_; }
    mpz_class modulus() const { return pow_p(p_, prec_); }

    bool is_zero() const noexcept { return r_ == 0; }
    bool is_unit() const; /* first digit nonzero */

    /* min(v_p(residue), prec); the zero residue has valuation prec. */
    std::uint32_t valuation() const;

    ZqInt operator+(const ZqInt& o) const;
    ZqInt operator-(const ZqInt& o) const;
    ZqInt operator*(const ZqInt& o) const;
    ZqInt operator-() const;
    bool operator==(const ZqInt& o) const;
    bool operator!=(const ZqInt& o) const { return !(*this == o); }

    /* Newton inverse; requires a unit (errc::non_unit otherwise). */
    ZqInt inverse() const;

    /* Same residue reduced to a lower precision. */
    ZqInt reduced(std::uint32_t new_prec) const;
    /* Same residue viewed at a higher precision (new high digits are zero). */
    ZqInt embedded(std::uint32_t new_prec) const;

    /* Exact division by p^k; requires valuation() >= k. */
    ZqInt shifted_down(std::uint32_t k) const;

    /* prec digits, least significant first. */
    std::vector<std::uint32_t> digits() const;
    std::string digit_string() const;

    /* Symmetric representative in (-p^prec/2, p^prec/2]. */
    mpz_class balanced() const;

  private:
    std::uint32_t p_;
    std::uint32_t prec_;
    mpz_class r_;

    void check_same_ring(const ZqInt& o) const;
};

/* Inverse of a unit residue; Newton iteration with doubling precision. */
ZqInt unit_inverse(const ZqInt& u);

/*
   2-adic square root.  Requires p = 2 and u ≡ 1 (mod 8) for prec >= 3
   (errc::no_square_root otherwise).  Returns the root s with s ≡ 1 (mod 4);
   among the residues mod 2^prec satisfying both conditions the numerically
   smallest is returned, making the branch deterministic.
*/
ZqInt sqrt_2adic(const ZqInt& u);

} // namespace zqcode

#endif
