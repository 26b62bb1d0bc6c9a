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

/// Multiplicative order of a modulo n.  Requires gcd(a, n) = 1.
std::uint32_t multiplicative_order(std::uint32_t a, std::uint32_t n);

/// Orbits of multiplication by p on Z/n.  Each orbit is sorted ascending and
/// the orbits are ordered by their smallest element, so the first coset is
/// always {0}.  Requires gcd(n, p) = 1.
std::vector<std::vector<std::uint32_t>> cyclotomic_cosets(std::uint32_t n,
                                                          std::uint32_t p);

/// Arithmetic in GF(p^m), with elements stored as coefficient vectors of
/// length m over GF(p) (constant term first) and reduced modulo a fixed monic
/// polynomial of degree m.
class Gfpm {
  public:
    using Elem = std::vector<std::uint32_t>;

    /// Builds the field using the canonical modulus: the monic primitive
    /// polynomial of degree m over GF(p) whose coefficient vector, read as the
    /// base-p integer sum(c_i p^i), is smallest.
    Gfpm(std::uint32_t p, std::uint32_t m);

    std::uint32_t p() const { return p_; }
    std::uint32_t m() const { return m_; }
    /// The defining modulus, as a polynomial over Z/p (degree m, monic).
    Poly modulus_poly() const;

    Elem zero() const { return Elem(m_, 0); }
    Elem one() const;
    Elem generator() const; /* the class Y of the defining variable */
    bool is_zero(const Elem& a) const;
    /// True when a lies in the prime field, i.e. only the constant
    /// coordinate may be nonzero.
    bool in_prime_field(const Elem& a) const;

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem pow(const Elem& a, std::uint64_t e) const;
    Elem inverse(const Elem& a) const;

  private:
    std::uint32_t p_;
    std::uint32_t m_;
    std::vector<std::uint32_t> mod_; /* m+1 coefficients, monic */
};

/// The factorization of X^n - 1 into monic irreducibles over GF(p), together
/// with the coset bookkeeping that names each factor.
struct CyclotomicFactorization {
    std::uint32_t p = 0;
    std::uint32_t n = 0;
    std::uint32_t m = 0; /* multiplicative order of p mod n */
    /// Cosets ordered by leader; factor i has the roots xi^j for j in
    /// cosets[i], where xi is the fixed primitive n-th root of unity below.
    std::vector<std::vector<std::uint32_t>> cosets;
    /// Monic irreducible factors over Z/p (precision-1 polynomials), aligned
    /// with `cosets`.  factors[0] is always X - 1.
    std::vector<Poly> factors;
    /// Defining modulus of the splitting field GF(p^m).
    Poly field_modulus;

    /// Index of the coset containing j mod n.
    std::size_t coset_index(std::uint32_t j) const;
    /// Index i' such that factor i' is the (monic) reciprocal of factor i;
    /// equivalently the coset of -j for j in coset i.
    std::size_t reciprocal_index(std::size_t i) const;
};

/// Factors X^n - 1 over GF(p).  Requires gcd(n, p) = 1 (throws BadLength
/// otherwise) and n >= 1.
CyclotomicFactorization factor_cyclotomic(std::uint32_t n, std::uint32_t p);

/// True when the mod-p reduction of f is irreducible over GF(p) (constants
/// and the zero polynomial are not).
bool is_irreducible_mod_p(const Poly& f);

} // namespace zqcode
