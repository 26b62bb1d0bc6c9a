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

#include "zqcode/gfp.hpp"
#include "zqcode/poly.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace zqcode {

/// The factorization of X^n - 1 into monic polynomials over Z/p^prec whose
/// reductions mod p are the irreducible factors.  Such a lift exists and is
/// unique because the mod-p factors are pairwise coprime; the coset data of
/// the base factorization therefore still names each lifted factor.
struct LiftedFactorization {
    std::uint32_t p = 0;
    std::uint32_t prec = 0;
    std::uint32_t n = 0;
    CyclotomicFactorization base;
    /// Monic factors over Z/p^prec, aligned with base.cosets.
    std::vector<Poly> factors;

    std::size_t count() const { return factors.size(); }
    std::size_t coset_index(std::uint32_t j) const { return base.coset_index(j); }
    std::size_t reciprocal_index(std::size_t i) const { return base.reciprocal_index(i); }
};

/// Lifts a mod-p factorization of X^n - 1 to precision prec by recursive
/// two-way splitting with quadratically converging refinement steps.
LiftedFactorization lift_factorization(const CyclotomicFactorization& base,
                                       std::uint32_t prec);

/// factor_cyclotomic followed by lift_factorization.
LiftedFactorization lift_cyclotomic(std::uint32_t n, std::uint32_t p,
                                    std::uint32_t prec);

/// One refinement step for a coprime pair: given monic g0, h0 with
/// g0 * h0 ≡ F (mod p) and gcd(g0, h0) = 1 over GF(p) (errc::not_coprime
/// otherwise), returns the unique monic lifts with g * h = F at the precision
/// of F.  F must be monic.
std::pair<Poly, Poly> hensel_pair(const Poly& F, const Poly& g0, const Poly& h0);

/// The polynomial whose roots are the p-th powers of the roots of h (monic,
/// same degree, same ring).  For p = 2 this is H with H(X^2) = ±h(X)h(-X);
/// for odd p it is the characteristic polynomial of multiplication by
/// Y^p mod h, computed division-free.
Poly pth_power_roots_step(const Poly& h);

/// Alternative lifting route for a single factor of X^n - 1: starting from
/// the mod-p factor, each pth_power_roots_step permutes the true roots and
/// gains one digit of accuracy, so prec - 1 steps reach precision prec.
/// Agreement with lift_factorization is checked by the callers' tests.
Poly lift_factor_pth_power(const Poly& f0, std::uint32_t prec);

} // namespace zqcode
