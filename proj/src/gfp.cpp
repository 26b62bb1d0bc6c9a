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

#include "zqcode/gfp.hpp"

#include "zqcode/errors.hpp"

#include <algorithm>
#include <numeric>

namespace zqcode {

namespace {

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

std::vector<std::uint32_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint32_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(static_cast<std::uint32_t>(d));
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(static_cast<std::uint32_t>(n));
    return out;
}

/* --- dense polynomial helpers over GF(p), constant term first --------- */

using Fp = std::vector<std::uint32_t>;

void trim(Fp& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int fdeg(const Fp& a) { return static_cast<int>(a.size()) - 1; }

Fp fmul(const Fp& a, const Fp& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Fp out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = static_cast<std::uint32_t>(
                (out[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
    trim(out);
    return out;
}

/* remainder of a modulo monic divisor d */
Fp fmod(Fp a, const Fp& d, std::uint32_t p) {
    int dd = fdeg(d);
    while (fdeg(a) >= dd) {
        std::uint32_t lead = a.back();
        std::size_t shift = a.size() - d.size();
        if (lead != 0) {
            for (std::size_t i = 0; i < d.size(); ++i) {
                std::uint64_t sub = static_cast<std::uint64_t>(lead) * d[i] % p;
                a[shift + i] =
                    static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
            }
        }
        a.pop_back();
        trim(a);
    }
    return a;
}

bool is_irreducible(const Fp& f, std::uint32_t p) {
    int d = fdeg(f);
    if (d <= 0) return false;
    if (d == 1) return true;
    if (f[0] == 0) return false; /* divisible by X */
    /* trial division by every monic polynomial of degree 1..d/2; the search
       space is tiny for the field sizes used here */
    for (int dd = 1; 2 * dd <= d; ++dd) {
        std::uint64_t count = 1;
        for (int i = 0; i < dd; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            Fp div(static_cast<std::size_t>(dd) + 1, 0);
            std::uint64_t c = code;
            for (int i = 0; i < dd; ++i) {
                div[static_cast<std::size_t>(i)] =
                    static_cast<std::uint32_t>(c % p);
                c /= p;
            }
            div[static_cast<std::size_t>(dd)] = 1;
            if (fmod(f, div, p).empty()) return false;
        }
    }
    return true;
}

Fp fpow_mod(Fp base, std::uint64_t e, const Fp& mod, std::uint32_t p) {
    Fp result{1};
    base = fmod(std::move(base), mod, p);
    while (e) {
        if (e & 1) result = fmod(fmul(result, base, p), mod, p);
        base = fmod(fmul(base, base, p), mod, p);
        e >>= 1;
    }
    return result;
}

/* Y generates the full multiplicative group of GF(p)[Y]/(f)? */
bool is_primitive(const Fp& f, std::uint32_t p) {
    int m = fdeg(f);
    std::uint64_t order = 1;
    for (int i = 0; i < m; ++i) order *= p;
    order -= 1;
    Fp y{0, 1};
    if (fpow_mod(y, order, f, p) != Fp{1}) return false;
    for (std::uint32_t ell : prime_divisors(order))
        if (fpow_mod(y, order / ell, f, p) == Fp{1}) return false;
    return true;
}

Fp canonical_primitive_modulus(std::uint32_t p, std::uint32_t m) {
    if (m == 1) {
        /* X - g for the smallest primitive root g mod p; the integer code
           sum(c_i p^i) is minimized by the smallest residue -g mod p, i.e.
           the largest primitive root.  Keep the same rule as m > 1: scan
           codes upward. */
        for (std::uint32_t low = 0; low < p; ++low) {
            Fp f{low, 1};
            if (is_primitive(f, p)) return f;
        }
        throw domain_error(errc::internal_check_failed,
                           "no primitive degree-1 modulus found");
    }
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < m; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
        Fp f(m + 1, 0);
        std::uint64_t c = code;
        for (std::uint32_t i = 0; i < m; ++i) {
            f[i] = static_cast<std::uint32_t>(c % p);
            c /= p;
        }
        f[m] = 1;
        if (f[0] == 0) continue;
        if (is_irreducible(f, p) && is_primitive(f, p)) return f;
    }
    throw domain_error(errc::internal_check_failed,
                       "no primitive modulus found");
}

} // namespace

std::uint32_t multiplicative_order(std::uint32_t a, std::uint32_t n) {
    if (n == 0 || gcd_u64(a % n, n) != 1)
        throw domain_error(errc::invalid_argument,
                           "order undefined unless gcd(a, n) = 1");
    if (n == 1) return 1;
    std::uint64_t x = a % n;
    std::uint32_t ord = 1;
    while (x != 1) {
        x = x * a % n;
        ++ord;
        if (ord > n)
            throw domain_error(errc::internal_check_failed,
                               "order computation did not terminate");
    }
    return ord;
}

std::vector<std::vector<std::uint32_t>> cyclotomic_cosets(std::uint32_t n,
                                                          std::uint32_t p) {
    if (n == 0 || gcd_u64(n, p) != 1)
        throw domain_error(errc::bad_length,
                           "length must be nonzero and coprime to the base");
    std::vector<bool> seen(n, false);
    std::vector<std::vector<std::uint32_t>> cosets;
    for (std::uint32_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<std::uint32_t> orbit;
        std::uint64_t j = s;
        do {
            orbit.push_back(static_cast<std::uint32_t>(j));
            seen[static_cast<std::size_t>(j)] = true;
            j = j * p % n;
        } while (j != s);
        std::sort(orbit.begin(), orbit.end());
        cosets.push_back(std::move(orbit));
    }
    return cosets; /* discovered in order of smallest element already */
}

Gfpm::Gfpm(std::uint32_t p, std::uint32_t m) : p_(p), m_(m) {
    if (!is_prime_u32(p))
        throw domain_error(errc::invalid_argument, "field base must be prime");
    if (m == 0)
        throw domain_error(errc::invalid_argument,
                           "field degree must be positive");
    mod_ = canonical_primitive_modulus(p, m);
}

Poly Gfpm::modulus_poly() const {
    std::vector<mpz_class> cs;
    cs.reserve(mod_.size());
    for (std::uint32_t c : mod_) cs.emplace_back(c);
    return Poly(p_, 1, std::move(cs));
}

Gfpm::Elem Gfpm::one() const {
    Elem e(m_, 0);
    e[0] = 1;
    return e;
}

Gfpm::Elem Gfpm::generator() const {
    Elem e(m_, 0);
    if (m_ == 1)
        e[0] = (p_ - mod_[0]) % p_; /* Y ≡ -c for modulus Y + c */
    else
        e[1] = 1;
    return e;
}

bool Gfpm::is_zero(const Elem& a) const {
    return std::all_of(a.begin(), a.end(),
                       [](std::uint32_t c) { return c == 0; });
}

bool Gfpm::in_prime_field(const Elem& a) const {
    for (std::size_t i = 1; i < a.size(); ++i)
        if (a[i] != 0) return false;
    return true;
}

Gfpm::Elem Gfpm::add(const Elem& a, const Elem& b) const {
    Elem out(m_);
    for (std::uint32_t i = 0; i < m_; ++i) out[i] = (a[i] + b[i]) % p_;
    return out;
}

Gfpm::Elem Gfpm::sub(const Elem& a, const Elem& b) const {
    Elem out(m_);
    for (std::uint32_t i = 0; i < m_; ++i) out[i] = (a[i] + p_ - b[i]) % p_;
    return out;
}

Gfpm::Elem Gfpm::mul(const Elem& a, const Elem& b) const {
    Fp prod = fmul(Fp(a.begin(), a.end()), Fp(b.begin(), b.end()), p_);
    Fp red = fmod(std::move(prod), mod_, p_);
    Elem out(m_, 0);
    for (std::size_t i = 0; i < red.size(); ++i) out[i] = red[i];
    return out;
}

Gfpm::Elem Gfpm::pow(const Elem& a, std::uint64_t e) const {
    Elem result = one(), base = a;
    while (e) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

Gfpm::Elem Gfpm::inverse(const Elem& a) const {
    if (is_zero(a)) throw domain_error(errc::non_unit, "zero has no inverse");
    std::uint64_t order = 1;
    for (std::uint32_t i = 0; i < m_; ++i) order *= p_;
    return pow(a, order - 2);
}

bool is_irreducible_mod_p(const Poly& f) {
    Poly r = f.prec() == 1 ? f : f.reduced(1);
    if (r.degree() < 1) return false;
    Fp v;
    v.reserve(r.coeffs().size());
    for (const auto& c : r.coeffs())
        v.push_back(static_cast<std::uint32_t>(mpz_class(c).get_ui()));
    /* normalize the leading coefficient; irreducibility is scale-invariant */
    std::uint32_t p = r.p();
    std::uint32_t lead = v.back();
    if (lead != 1) {
        std::uint32_t inv = 1;
        while (inv * lead % p != 1) ++inv;
        for (auto& c : v) c = static_cast<std::uint32_t>(
            static_cast<std::uint64_t>(c) * inv % p);
    }
    return is_irreducible(v, p);
}

std::size_t CyclotomicFactorization::coset_index(std::uint32_t j) const {
    j %= n;
    for (std::size_t i = 0; i < cosets.size(); ++i)
        if (std::binary_search(cosets[i].begin(), cosets[i].end(), j)) return i;
    throw domain_error(errc::internal_check_failed, "cosets do not cover Z/n");
}

std::size_t CyclotomicFactorization::reciprocal_index(std::size_t i) const {
    std::uint32_t leader = cosets.at(i).front();
    return coset_index((n - leader % n) % n);
}

CyclotomicFactorization factor_cyclotomic(std::uint32_t n, std::uint32_t p) {
    if (!is_prime_u32(p))
        throw domain_error(errc::invalid_argument, "base must be prime");
    CyclotomicFactorization out;
    out.p = p;
    out.n = n;
    out.cosets = cyclotomic_cosets(n, p); /* validates gcd(n, p) = 1 */
    out.m = (n == 1) ? 1 : multiplicative_order(p, n);

    Gfpm field(p, out.m);
    out.field_modulus = field.modulus_poly();

    std::uint64_t group = 1;
    for (std::uint32_t i = 0; i < out.m; ++i) group *= p;
    group -= 1;
    require(group % n == 0, "splitting field misses the roots of unity");
    Gfpm::Elem xi = field.pow(field.generator(), group / n);

    for (const auto& coset : out.cosets) {
        /* minimal polynomial: product of (X - xi^j) over the coset, computed
           with coefficients in GF(p^m) */
        std::vector<Gfpm::Elem> cs{field.one()}; /* monic, degree grows */
        for (std::uint32_t j : coset) {
            Gfpm::Elem root = field.pow(xi, j);
            std::vector<Gfpm::Elem> next(cs.size() + 1, field.zero());
            for (std::size_t i = 0; i < cs.size(); ++i) {
                next[i + 1] = field.add(next[i + 1], cs[i]);
                next[i] = field.sub(next[i], field.mul(cs[i], root));
            }
            cs = std::move(next);
        }
        std::vector<mpz_class> coeffs;
        coeffs.reserve(cs.size());
        for (const auto& c : cs) {
            require(field.in_prime_field(c),
                    "minimal polynomial has a coefficient outside GF(p)");
            coeffs.emplace_back(c[0]);
        }
        out.factors.emplace_back(p, 1, std::move(coeffs));
    }

    /* verify the factorization multiplies back to X^n - 1 */
    Poly prod = Poly::constant(p, 1, 1);
    for (const auto& f : out.factors) prod = prod * f;
    require(prod == Poly::x_pow_minus_one(p, 1, n),
            "factor product does not equal X^n - 1");
    return out;
}

} // namespace zqcode
