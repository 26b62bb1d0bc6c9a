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

/// Maximum-distance-separability certificates.
///
/// A free rank-k code of length N reaches the Singleton bound exactly when
/// every k x k minor of its k x N generator matrix is nonzero over the
/// coefficient field.  For the codes built here the generator entries live
/// in a quadratic ring Z[w]/(w^2 - w + c) that embeds into the p-adic
/// integers, so exact minors over Z[w] decide nonvanishing over Q_p.  This
/// module provides exact determinants (fraction-free elimination), full and
/// deterministically sampled column-subset scans, and a p-adic valuation
/// for determinants of matrices given modulo p^prec.

#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "zqcode/quad_int.hpp"

namespace zqcode {

/// Dense row-major matrix over Z[w]/(w^2 - w + c).
struct QuadMatrix {
    long c = 2;
    std::size_t rows = 0, cols = 0;
    std::vector<QuadInt> entries;

    static QuadMatrix zero(long c, std::size_t rows, std::size_t cols);
    QuadInt& at(std::size_t r, std::size_t col) { return entries[r * cols + col]; }
    const QuadInt& at(std::size_t r, std::size_t col) const {
        return entries[r * cols + col];
    }
};

/// Exact determinant of a square QuadMatrix by fraction-free (Bareiss)
/// elimination; every interior division is exact in Z[w].
QuadInt quad_det(QuadMatrix m);

struct MinorScan {
    bool all_nonzero = true;
    std::uint64_t checked = 0;         ///< minors actually evaluated
    std::uint64_t total = 0;           ///< column subsets in scope
    std::vector<std::size_t> witness;  ///< columns of a vanishing minor, if any
};

/// Evaluate every rows x rows minor (all column subsets); parallel across
/// subsets, stopping early once a vanishing minor is seen.
MinorScan scan_minors(const QuadMatrix& m, int threads = 0);

/// Evaluate `samples` column subsets drawn reproducibly from `seed`.
MinorScan scan_minors_sampled(const QuadMatrix& m, std::uint64_t samples,
                              std::uint64_t seed);

/// Binomial coefficient, saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// p-adic valuation of det(m) where entries are known modulo p^prec:
/// the exact valuation when it is below prec, otherwise prec (meaning
/// "at least prec").  m must be square.
std::uint32_t minor_valuation(std::uint32_t p, std::uint32_t prec,
                              std::vector<std::vector<mpz_class>> m);

} // namespace zqcode
