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

#pragma once

#include "zqcode/poly.hpp"

#include <cstdint>
#include <vector>

namespace zqcode {

/// The Galois ring GR(p^a, m) = Z_{p^a}[X]/(pi) for a monic degree-m modulus
/// pi that is irreducible mod p.  Elements are polynomials over Z_{p^a} of
/// degree < m; all arithmetic is provided by this ring object.
class GaloisRing {
  public:
    /// Canonical construction: pi is the precision-a lift of the mod-p
    /// minimal polynomial of a fixed primitive (p^m - 1)-th root of unity,
    /// so root() has multiplicative order p^m - 1.
    GaloisRing(std::uint32_t p, std::uint32_t a, std::uint32_t m);

    /// Construction from an explicit modulus (monic, irreducible mod p;
    /// errc::not_monic / errc::invalid_argument otherwise).  root() is then
    /// simply the class of X and need not have order p^m - 1.
    explicit GaloisRing(Poly pi);

    std::uint32_t p() const { return p_; }
    std::uint32_t prec() const { return prec_; }
    std::uint32_t m() const { return m_; }
    const Poly& modulus() const { return pi_; }

    Poly zero() const { return Poly(p_, prec_); }
    Poly one() const { return Poly::constant(p_, prec_, 1); }
    Poly root() const; /* the class of X */
    Poly from_poly(const Poly& f) const; /* reduce mod pi into the ring */
    Poly scalar(const mpz_class& v) const;

    Poly add(const Poly& x, const Poly& y) const;
    Poly sub(const Poly& x, const Poly& y) const;
    Poly mul(const Poly& x, const Poly& y) const;
    Poly pow(const Poly& x, const mpz_class& e) const;
    bool is_unit(const Poly& x) const;
    /// Largest r with x in p^r GR, capped at the precision (zero -> prec).
    std::uint32_t valuation(const Poly& x) const;
    /// Inverse of a unit (errc::non_unit otherwise).
    Poly inverse(const Poly& x) const;

    /// The unique y with y = x mod p and y^(p^m) = y (the multiplicative
    /// section of reduction mod p; zero for non-units).
    Poly teichmuller(const Poly& x) const;
    /// Digits of x in base p with Teichmuller coefficients: a elements
    /// c_0..c_{a-1}, each a full-precision Teichmuller element, with
    /// x = sum p^r c_r.
    std::vector<Poly> padic_coords(const Poly& x) const;
    /// The ring automorphism sending the class of X to its p-th power; it
    /// fixes Z_{p^a}, generates a cyclic group of order m, and reduces to the
    /// field Frobenius mod p.
    Poly frobenius(const Poly& x) const;
    /// All p^m Teichmuller elements: zero followed by the powers
    /// root()^0, ..., root()^(p^m - 2).  Only valid for the canonical
    /// construction where root() is primitive.
    std::vector<Poly> teichmuller_set() const;

  private:
    std::uint32_t p_;
    std::uint32_t prec_;
    std::uint32_t m_;
    Poly pi_;

    void check_element(const Poly& x) const;
};

} // namespace zqcode
