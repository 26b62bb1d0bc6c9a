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

#ifndef ZQCODE_KERNELS_HPP
#define ZQCODE_KERNELS_HPP

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "zqcode/code.hpp"

namespace zqcode {

enum class Metric { hamming, lee };

struct EnumOptions {
    /// Maximum number of codewords visited before errc::budget_exceeded.
    std::uint64_t budget = std::uint64_t(1) << 28;
    /// Thread cap for the parallel kernels; 0 means the OpenMP default.
    int threads = 0;
};

/// A staircase generator matrix packed into machine words for codeword
/// enumeration.  Row i is added with digits c_i in [0, digit_range[i]), and
/// rows are sorted by their first nonzero coordinate, so once rows 0..t-1
/// are fixed every coordinate below start[t] is final -- which is what the
/// weight pruning in the minimum-distance scan keys on.  Requires the
/// alphabet to fit comfortably in words: p^prec < 2^31
/// (errc::invalid_argument otherwise).
struct EnumMatrix {
    std::uint32_t p = 2, prec = 1;
    std::uint64_t q = 2;
    std::size_t length = 0;
    std::vector<std::vector<std::uint64_t>> rows;
    std::vector<std::uint64_t> digit_range;
    std::vector<std::size_t> start;

    /// Number of codewords (product of the digit ranges).
    std::uint64_t word_count() const;
};

EnumMatrix pack_code(const CyclicCode& code);
EnumMatrix pack_extended(const ExtendedCode& code);

struct WeightScan {
    std::uint64_t weight = 0; ///< minimum weight over nonzero codewords
    std::uint64_t words = 0;  ///< codewords actually visited
};

/// Minimum nonzero weight by depth-first enumeration with prefix-weight
/// pruning.  The zero code (no free digits) is rejected with
/// errc::invalid_argument.  Serial reference implementation.
WeightScan min_weight_serial(const EnumMatrix& m, Metric metric, const EnumOptions& opts);

/// Same scan, parallelized over the leading digit choices with a shared
/// best-so-far bound.  Falls back to the serial scan when OpenMP is absent.
WeightScan min_weight(const EnumMatrix& m, Metric metric, const EnumOptions& opts);

/// Full weight histogram (index = weight); no pruning, so the codeword
/// count must fit the budget.  Serial reference and parallel versions.
std::vector<std::uint64_t> weight_distribution_serial(const EnumMatrix& m, Metric metric,
                                                      const EnumOptions& opts);
std::vector<std::uint64_t> weight_distribution(const EnumMatrix& m, Metric metric,
                                               const EnumOptions& opts);

} // namespace zqcode

#endif
