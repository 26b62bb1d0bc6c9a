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

#ifndef ZQCODE_SPAN_SET_HPP
#define ZQCODE_SPAN_SET_HPP

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "zqcode/poly.hpp"

namespace zqcode {

/// The literal codeword set of the ideal generated by a list of
/// polynomials in Z/p^prec[X]/(X^n - 1): the additive closure of all cyclic
/// shifts of the generators, stored as a dense bitset over the mixed-radix
/// index space of size (p^prec)^n.  Exhaustive and structure-free on
/// purpose: tests use it as an independent ground truth for the ideal
/// machinery.  Requires (p^prec)^n <= 2^28 (errc::budget_exceeded).
class SpanSet {
  public:
    SpanSet(std::uint32_t n, std::uint32_t p, std::uint32_t prec,
            const std::vector<Poly>& gens);

    std::uint32_t n() const noexcept { return n_; }
    std::uint64_t space() const noexcept { return space_; }
    std::uint64_t size() const noexcept { return size_; }

    bool contains(const std::vector<std::uint64_t>& v) const;
    bool contains(const Poly& v) const;

    bool operator==(const SpanSet& o) const;
    bool operator!=(const SpanSet& o) const { return !(*this == o); }

  private:
    std::uint32_t n_, p_, prec_;
    std::uint64_t q_ = 0, space_ = 0, size_ = 0;
    std::vector<std::uint64_t> qpow_;
    std::vector<std::uint64_t> bits_;

    std::uint64_t rank(const std::vector<std::uint64_t>& digits) const;
    bool test(std::uint64_t idx) const {
        return (bits_[idx >> 6] >> (idx & 63)) & 1;
    }
    bool set(std::uint64_t idx) {
        std::uint64_t& w = bits_[idx >> 6];
        const std::uint64_t bit = std::uint64_t(1) << (idx & 63);
        if (w & bit)
            return false;
        w |= bit;
        return true;
    }
};

} // namespace zqcode

#endif
