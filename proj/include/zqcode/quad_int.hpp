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

#ifndef ZQCODE_QUAD_INT_HPP
#define ZQCODE_QUAD_INT_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "zqcode/errors.hpp"
#include "zqcode/zq.hpp"

namespace zqcode {

/*
   Exact element x + y*w of the quadratic order Z[w], w^2 = w - c, for a fixed
   small positive parameter c.  The rings used here have c in {2, 3, 6}; the
   defining polynomial X^2 - X + c is irreducible over Q for c >= 1, so Z[w]
   is an integral domain and a zero determinant computed here is exact.
*/
class QuadInt {
  public:
    QuadInt() : x_(0), y_(0), c_(2) {}
    QuadInt(long c, mpz_class x, mpz_class y) : x_(std::move(x)), y_(std::move(y)), c_(c) {}
    static QuadInt integer(long c, long v) { return QuadInt(c, mpz_class(v), mpz_class(0)); }
    static QuadInt omega(long c) { return QuadInt(c, mpz_class(0), mpz_class(1)); }

    const mpz_class& x() const noexcept { return x_; }
    const mpz_class& y() const noexcept { return y_; }
    long c() const noexcept { return c_; }

    bool is_zero() const noexcept { return x_ == 0 && y_ == 0; }

    QuadInt operator+(const QuadInt& o) const;
    QuadInt operator-(const QuadInt& o) const;
    QuadInt operator*(const QuadInt& o) const;
    QuadInt operator-() const { return QuadInt(c_, -x_, -y_); }
    bool operator==(const QuadInt& o) const;
    bool operator!=(const QuadInt& o) const { return !(*this == o); }

    /* conjugate maps w to 1 - w (the other root of X^2 - X + c) */
    QuadInt conjugate() const { return QuadInt(c_, x_ + y_, -y_); }
    /* field norm x^2 + xy + c y^2; zero only at zero */
    mpz_class norm() const { return x_ * x_ + x_ * y_ + c_ * y_ * y_; }

    /* exact quotient; requires divisibility in Z[w] (internal check) */
    QuadInt divexact(const QuadInt& d) const;

    /* image under w -> root in Z_p at the root's precision */
    ZqInt embed(const ZqInt& omega_value) const;

    std::string to_string() const; /* e.g. "3+2w", "-1", "w" */

  private:
    mpz_class x_, y_;
    long c_;

    void check_same_ring(const QuadInt& o) const;
};

} // namespace zqcode

#endif
