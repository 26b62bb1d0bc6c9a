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

/// Named code families.
///
/// Each family fixes a length n and prime p whose splitting is controlled
/// by a quadratic ring Z[w]/(w^2 - w + c) embedding into Z_p, and provides:
/// the cyclic code at any precision, its classic one-digit extension, the
/// generator polynomial written in the quadratic root (checked against the
/// Hensel lift of the mod-p factor), and the exact generator matrix over
/// Z[w] used for Singleton-bound certificates.  Quadratic-residue codes,
/// lifted BCH/Reed-Muller codes, and the Lee-distance tower of the
/// length-8 family round out the catalog.

#pragma once

#include <cstdint>
#include <vector>

#include "zqcode/code.hpp"
#include "zqcode/kernels.hpp"
#include "zqcode/mds.hpp"

namespace zqcode {

/* length 7 over Z/2^prec; quadratic ring c = 2 */
Poly hamming_generator(std::uint32_t prec);
CyclicCode hamming_cyclic(std::uint32_t prec);
ExtendedCode hamming_extended(std::uint32_t prec);
QuadMatrix hamming_quad_matrix();

/* length 23 over Z/2^prec; quadratic ring c = 6 */
Poly golay2_generator(std::uint32_t prec);
CyclicCode golay2_cyclic(std::uint32_t prec);
ExtendedCode golay2_extended(std::uint32_t prec);
QuadMatrix golay2_quad_matrix();

/* length 11 over Z/3^prec; quadratic ring c = 3 */
Poly golay3_generator(std::uint32_t prec);
CyclicCode golay3_cyclic(std::uint32_t prec);
ExtendedCode golay3_extended(std::uint32_t prec);
QuadMatrix golay3_quad_matrix();

/// The two quadratic-residue codes of prime length n = 7 (mod 8) over
/// Z/2^prec, built from their idempotents
///   e1 = (n+1)/2n + (1+s)/2n f_Q + (1-s)/2n f_N,
///   e2 = (n-1)/2n + (-1+s)/2n f_Q + (-1-s)/2n f_N,
/// where s is the branch of sqrt(-n) for which (e1) is the ideal of the
/// lifted residue-coset factor, f_Q and f_N are the sums of X^j over the
/// nonzero residues and non-residues.  code2 = ((X-1) pi) is the even-sum
/// subcode of code1 = (pi).  All identities are verified on construction.
struct QrPair {
    CyclicCode code1;
    CyclicCode code2;
    Poly idempotent1;
    Poly idempotent2;
    ZqInt sqrt_minus_n;
};

QrPair qr_codes(std::uint32_t n, std::uint32_t prec);

/// The self-dual extension of code1: each row r gains the check digit
/// -sqrt(-1/n) r(1).
ExtendedCode qr_extended_self_dual(std::uint32_t n, std::uint32_t prec);

/// Lift of the BCH code of designed distance delta and length p^m - 1:
/// the components whose coset meets {1, ..., delta-1} are annihilated.
CyclicCode bch_lift(std::uint32_t p, std::uint32_t m, std::uint32_t delta,
                    std::uint32_t prec);

/// Lift of the punctured Reed-Muller code RM(r, m) of length 2^m - 1:
/// annihilates the components of the nonzero exponents of binary weight
/// below m - r.
CyclicCode rm_lift(std::uint32_t r, std::uint32_t m, std::uint32_t prec);

/// One precision level of the length-8 extension tower: measured minimum
/// distances plus the Lee weight of the defining quadratic root, computed
/// directly and by the digit recurrence
///   w_1 = 0,   w_m = alpha_{m-1} + bit_{m-1} (2^{m-1} - 2 alpha_{m-1}),
/// where alpha_k is the root mod 2^k and bit_k its k-th binary digit.
struct LeeTowerRow {
    std::uint32_t a = 0;
    std::uint64_t d_hamming = 0;
    std::uint64_t d_lee = 0;
    std::uint64_t root_weight = 0;
    std::uint64_t recurrence_weight = 0;
};

std::vector<LeeTowerRow> lee_distance_tower(std::uint32_t a_max,
                                            const EnumOptions& opts = {});

/// The two weight columns of a tower row, available without any codeword
/// enumeration: the Lee weight of the quadratic root in Z/2^a directly and
/// via the recurrence above.
std::uint64_t root_lee_weight(std::uint32_t a);
std::uint64_t root_lee_weight_recurrence(std::uint32_t a);

} // namespace zqcode
