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

#ifndef ZQCODE_CODE_HPP
#define ZQCODE_CODE_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "zqcode/hensel.hpp"
#include "zqcode/poly.hpp"
#include "zqcode/zq.hpp"

namespace zqcode {

/// Shared immutable data for all cyclic codes of length n over Z/p^prec:
/// the factorization of X^n - 1 into monic polynomials with irreducible
/// mod-p reductions, plus the cofactor (X^n - 1)/pi_i of every factor.
class LiftedContext {
  public:
    LiftedContext(std::uint32_t n, std::uint32_t p, std::uint32_t prec);

    std::uint32_t n() const noexcept { return lift_.n; }
    std::uint32_t p() const noexcept { return lift_.p; }
    std::uint32_t prec() const noexcept { return lift_.prec; }
    std::size_t count() const noexcept { return lift_.count(); }

    const LiftedFactorization& lift() const noexcept { return lift_; }
    const Poly& factor(std::size_t i) const { return lift_.factors.at(i); }
    const Poly& cofactor(std::size_t i) const { return cofactors_.at(i); }
    std::size_t reciprocal_index(std::size_t i) const { return lift_.reciprocal_index(i); }

    Poly modulus() const { return Poly::x_pow_minus_one(p(), prec(), n()); }

  private:
    LiftedFactorization lift_;
    std::vector<Poly> cofactors_;
};

using ContextPtr = std::shared_ptr<const LiftedContext>;

ContextPtr make_context(std::uint32_t n, std::uint32_t p, std::uint32_t prec);

/// One level of the canonical generating set: contributes the rows
/// X^i * p^m * f for 0 <= i < k (see generator_rows).  Levels have strictly
/// increasing m and strictly decreasing deg f, and each f divides the
/// previous one.
struct ChainLevel {
    std::uint32_t m;
    Poly f;
};

/// One block of the echelon generator matrix: k rows whose leading
/// coefficient is p^m.
struct TypeLevel {
    std::uint32_t m = 0;
    std::uint32_t k = 0;
};

/// The block profile of the echelon generator matrix, rendered as
/// "1^4 2^3" (labels are the scalars p^m as plain integers).  The zero
/// code has the empty profile "1^0".
struct TypeProfile {
    std::uint32_t p = 2;
    std::uint32_t cap = 1; ///< the precision a of the ambient ring
    std::uint32_t n = 0;
    std::vector<TypeLevel> levels;

    std::string to_string() const;
    /// log_p of the code size: sum over levels of (cap - m) * k.
    std::uint64_t size_exponent() const;
    /// Block sizes indexed by exponent m = 0..cap; index cap holds the
    /// leftover n - sum k (columns outside the staircase).
    std::vector<std::uint32_t> blocks_by_exponent() const;
};

/// An ideal of Z/p^prec[X]/(X^n - 1), i.e. a cyclic code of length n.
///
/// The canonical description is one exponent m_i in [0, prec] per factor
/// pi_i; the code is the product of the primary ideals (pi_i, p)^{m_i}.
/// When infinite_mode is set the object stands for an ideal of the ambient
/// ring at infinite precision, represented at the working precision; the
/// exponent value prec is then read as the limit power, meaning the primary
/// ideal (pi_i) rather than (pi_i, p^prec).
class CyclicCode {
  public:
    static CyclicCode from_generators(ContextPtr ctx, const std::vector<Poly>& gens,
                                      bool infinite_mode = false);
    static CyclicCode from_exponents(ContextPtr ctx, std::vector<std::uint32_t> exponents,
                                     bool infinite_mode = false);

    const LiftedContext& context() const { return *ctx_; }
    const ContextPtr& context_ptr() const noexcept { return ctx_; }
    std::uint32_t n() const noexcept { return ctx_->n(); }
    std::uint32_t p() const noexcept { return ctx_->p(); }
    std::uint32_t prec() const noexcept { return ctx_->prec(); }
    bool infinite_mode() const noexcept { return infinite_; }

    const std::vector<std::uint32_t>& exponents() const noexcept { return exps_; }
    const std::vector<ChainLevel>& chain() const noexcept { return chain_; }
    bool is_zero_code() const noexcept { return chain_.empty(); }

    TypeProfile type_profile() const;
    std::string type_string() const { return type_profile().to_string(); }
    /// "P_0^2 P_1", "1" for the full ring, the full product for the zero code.
    std::string ideal_string() const;
    std::uint64_t size_exponent() const { return type_profile().size_exponent(); }

    /// The staircase rows X^i * p^m * f, level by level; their leading
    /// monomials p^m X^d cover each degree in [deg f_last, n) exactly once.
    std::vector<Poly> generator_rows() const;
    /// The same rows as length-n coefficient vectors.
    std::vector<std::vector<mpz_class>> generator_matrix() const;

    /// Annihilator under the Euclidean inner product; verified internally
    /// (all row pairs orthogonal, sizes multiply to p^(prec*n)).  In
    /// infinite mode only codes whose exponents are all 0 or the limit
    /// power have a representable dual (errc::infinite_mode_unsupported).
    CyclicCode dual() const;

    /// A single generator of the ideal: sum over chain levels of p^m * f.
    /// Verified internally to generate the same ideal.
    Poly principal_generator() const;

    /// The idempotent e with e^2 = e and (e) = C, which exists exactly when
    /// every exponent is 0 or the top power; nullopt otherwise.
    std::optional<Poly> idempotent_generator() const;

    /// Membership; decided independently by component valuations and by
    /// peeling off staircase rows, which must agree.
    bool contains(const Poly& v) const;
    bool contains_vector(const std::vector<mpz_class>& v) const;

    /// Coefficients of a member on the staircase rows, aligned with
    /// generator_rows(); nullopt if v is not in the code.
    std::optional<std::vector<mpz_class>> staircase_coordinates(const Poly& v) const;

    bool operator==(const CyclicCode& o) const;
    bool operator!=(const CyclicCode& o) const { return !(*this == o); }

  private:
    CyclicCode(ContextPtr ctx, std::vector<std::uint32_t> exps, bool infinite_mode);

    ContextPtr ctx_;
    bool infinite_ = false;
    std::vector<std::uint32_t> exps_;
    std::vector<ChainLevel> chain_;

    void derive_chain();
};

/// The idempotent that is 0 at component i and 1 at every other component
/// of the splitting of Z/p^prec[X]/(X^n - 1); it generates the primary
/// ideal (pi_i).  Built twice -- digit-by-digit refinement of the mod-p
/// Bezout seed, and quadratic refinement of the Bezout pair itself -- and
/// the two results are checked to agree.
Poly component_idempotent(const LiftedContext& ctx, std::size_t i);

/// A cyclic code with one appended check coordinate (written last).  The
/// code is spanned by the staircase rows of the base code, each carrying an
/// appended digit that depends only on the chain level:
///   zero_sum:        -p^m f(1)      (row sums of the extension are 0)
///   append_constant: c * p^m
///   scaled_zero_sum: -s * p^m f(1)  (zero_sum with the check column scaled)
/// The quadratic-residue self-dual extension is scaled_zero_sum with
/// s = sqrt(-1/n), which requires p = 2 and n = 7 (mod 8).
class ExtendedCode {
  public:
    enum class Kind { zero_sum, append_constant, scaled_zero_sum };

    static ExtendedCode zero_sum(CyclicCode base);
    static ExtendedCode append_constant(CyclicCode base, const ZqInt& digit);
    static ExtendedCode scaled_zero_sum(CyclicCode base, const ZqInt& scale);
    static ExtendedCode qr_self_dual(CyclicCode base);

    const CyclicCode& base() const noexcept { return base_; }
    Kind kind() const noexcept { return kind_; }
    const ZqInt& parameter() const noexcept { return param_; }
    std::size_t length() const noexcept { return base_.n() + 1; }

    /// Appended digit of every row of the given chain level.
    ZqInt level_digit(std::size_t level) const;
    std::vector<std::vector<mpz_class>> generator_matrix() const;

    bool contains(const std::vector<mpz_class>& v) const;
    /// Set equality (mutual membership of generator rows).
    bool same_codewords(const ExtendedCode& o) const;
    /// All generator rows pairwise orthogonal and |C|^2 = p^(prec*(n+1)).
    bool is_self_dual() const;

  private:
    ExtendedCode(CyclicCode base, Kind kind, ZqInt param);

    CyclicCode base_;
    Kind kind_;
    ZqInt param_;
};

/// Coordinate substitution with per-coordinate unit scaling: the image w of
/// a vector v has w[j] = sign[j] * v[source[j]].  For extended codes the
/// check coordinate takes part like any other (index n).
struct Monomial {
    std::vector<std::size_t> source;
    std::vector<long> sign;

    /// Identity on len coordinates.
    static Monomial identity(std::size_t len);
    /// Apply one cycle (c_0 c_1 ... c_k), meaning the image picks
    /// coordinate c_{t+1} into position c_t.
    Monomial& with_cycle(const std::vector<std::size_t>& cycle);
    Monomial& with_negations(const std::vector<std::size_t>& coords);

    std::vector<mpz_class> apply(const std::vector<mpz_class>& v, const mpz_class& q) const;
};

/// Whether the monomial maps the code into itself (hence onto itself).
bool preserves(const CyclicCode& code, const Monomial& mono);
bool preserves(const ExtendedCode& code, const Monomial& mono);

} // namespace zqcode

#endif
