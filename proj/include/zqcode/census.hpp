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

/// Complete enumeration of the cyclic codes of one length: every exponent
/// vector, the derived invariants (type, dual type, canonical ideal), the
/// measured minimum distances, and a rendered table for the classic
/// three-factor length-7 binary case.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zqcode/code.hpp"
#include "zqcode/kernels.hpp"

namespace zqcode {

struct CodeReport {
    std::vector<std::uint32_t> exponents;
    std::string generators; ///< chain rows with appended zero-sum digit
    std::string type;
    std::string dual_type;
    std::string ideal;
    std::uint64_t size_exponent = 0;

    /// Minimum distances of the code and of its zero-sum extension;
    /// absent for the zero code or when distances were not requested.
    std::optional<std::uint64_t> d_hamming, d_lee;
    std::optional<std::uint64_t> d_star_hamming, d_star_lee;
    /// Free code meeting the Singleton bound (present iff distances ran).
    std::optional<bool> mds;
    /// Largest number of codewords visited by any one distance scan.
    std::uint64_t words = 0;
};

CodeReport analyze(const CyclicCode& code, bool distances,
                   const EnumOptions& opts = {});

/// Every cyclic code of the context, ordered lexicographically by exponent
/// vector; (prec+1)^count entries including the zero code and the full ring.
std::vector<CyclicCode> all_codes(const ContextPtr& ctx);

std::vector<CodeReport> census(const ContextPtr& ctx, bool distances,
                               const EnumOptions& opts = {});

/// The display table for the 27 codes of length 7 over Z4: one row per
/// equivalence class under swapping the two reciprocal cubic components
/// (rows whose exponent at the second cubic exceeds the first are omitted),
/// numbered by the full 27-entry traversal order.
std::string render_census_table(const std::vector<CodeReport>& reports);

/// Chain shape: the set of factor indices present in each chain level,
/// outermost (lowest scale) first.  An empty set is a constant level.
using ChainShape = std::vector<std::vector<std::size_t>>;

/// The 24 admissible shapes of a chain whose first level is a nontrivial
/// proper product, for a length whose X^n - 1 has exactly three factors:
/// (g0), (g0, const), and for two-factor g0 also (g0, g1) and
/// (g0, g1, const) with g1 a single factor dividing g0.  The remaining
/// codes are the constant-chain codes and the zero code.
std::vector<ChainShape> three_factor_shapes();

/// The shape of a code's chain; nullopt for the zero code.
std::optional<ChainShape> chain_shape(const CyclicCode& code);

} // namespace zqcode
