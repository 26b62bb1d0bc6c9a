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

#include "zqcode/span_set.hpp"

#include "zqcode/errors.hpp"

namespace zqcode {

SpanSet::SpanSet(std::uint32_t n, std::uint32_t p, std::uint32_t prec,
                 const std::vector<Poly>& gens)
    : n_(n), p_(p), prec_(prec) {
    const mpz_class qz = pow_p(p, prec);
    if (!qz.fits_ulong_p())
        throw domain_error(errc::budget_exceeded, "alphabet too large for exhaustive closure");
    q_ = qz.get_ui();

    qpow_.assign(n_ + 1, 1);
    for (std::uint32_t t = 0; t < n_; ++t) {
        if (qpow_[t] > (std::uint64_t(1) << 28) / q_ + 1)
            throw domain_error(errc::budget_exceeded, "codeword space too large for exhaustive closure");
        qpow_[t + 1] = qpow_[t] * q_;
    }
    space_ = qpow_[n_];
    if (space_ > (std::uint64_t(1) << 28))
        throw domain_error(errc::budget_exceeded, "codeword space too large for exhaustive closure");

    /* All cyclic shifts of all generators, as digit vectors. */
    std::vector<std::vector<std::uint64_t>> moves;
    for (const Poly& g : gens) {
        if (g.p() != p_ || g.prec() != prec_)
            throw domain_error(errc::ring_mismatch, "generator is not over the requested ring");
        const Poly gf = g.degree() < static_cast<int>(n_)
                            ? g
                            : divmod_monic(g, Poly::x_pow_minus_one(p_, prec_, n_)).second;
        std::vector<std::uint64_t> base(n_, 0);
        for (std::uint32_t t = 0; t < n_; ++t)
            base[t] = mpz_class(gf.coeff(t) % qz).get_ui();
        for (std::uint32_t s = 0; s < n_; ++s) {
            std::vector<std::uint64_t> shifted(n_);
            for (std::uint32_t t = 0; t < n_; ++t)
                shifted[(t + s) % n_] = base[t];
            bool zero = true;
            for (std::uint64_t d : shifted)
                zero = zero && d == 0;
            if (!zero)
                moves.push_back(std::move(shifted));
        }
    }

    bits_.assign((space_ + 63) / 64, 0);
    set(0);
    size_ = 1;

    std::vector<std::uint32_t> frontier{0}, next;
    std::vector<std::uint64_t> digits(n_), sum(n_);
    while (!frontier.empty()) {
        next.clear();
        for (std::uint32_t idx : frontier) {
            std::uint64_t rest = idx;
            for (std::uint32_t t = 0; t < n_; ++t) {
                digits[t] = rest % q_;
                rest /= q_;
            }
            for (const auto& mv : moves) {
                std::uint64_t nidx = 0;
                for (std::uint32_t t = n_; t-- > 0;) {
                    std::uint64_t d = digits[t] + mv[t];
                    if (d >= q_)
                        d -= q_;
                    nidx = nidx * q_ + d;
                }
                if (set(nidx)) {
                    ++size_;
                    next.push_back(static_cast<std::uint32_t>(nidx));
                }
            }
        }
        frontier.swap(next);
    }
}

std::uint64_t SpanSet::rank(const std::vector<std::uint64_t>& digits) const {
    std::uint64_t idx = 0;
    for (std::uint32_t t = n_; t-- > 0;) {
        require(digits[t] < q_, "digit out of range");
        idx = idx * q_ + digits[t];
    }
    return idx;
}

bool SpanSet::contains(const std::vector<std::uint64_t>& v) const {
    if (v.size() != n_)
        throw domain_error(errc::invalid_argument, "vector length must equal the code length");
    return test(rank(v));
}

bool SpanSet::contains(const Poly& v) const {
    if (v.p() != p_ || v.prec() != prec_)
        throw domain_error(errc::ring_mismatch, "vector is not over the requested ring");
    const Poly vf = v.degree() < static_cast<int>(n_)
                        ? v
                        : divmod_monic(v, Poly::x_pow_minus_one(p_, prec_, n_)).second;
    std::vector<std::uint64_t> digits(n_, 0);
    for (std::uint32_t t = 0; t < n_; ++t)
        digits[t] = mpz_class(vf.coeff(t)).get_ui();
    return test(rank(digits));
}

bool SpanSet::operator==(const SpanSet& o) const {
    return n_ == o.n_ && p_ == o.p_ && prec_ == o.prec_ && bits_ == o.bits_;
}

} // namespace zqcode
