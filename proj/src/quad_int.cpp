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

#include "zqcode/quad_int.hpp"

namespace zqcode {

void QuadInt::check_same_ring(const QuadInt& o) const {
    if (c_ != o.c_)
        throw domain_error(errc::ring_mismatch, "quadratic-ring parameters differ",
                           "c=" + std::to_string(c_) + "/" + std::to_string(o.c_));
}

QuadInt QuadInt::operator+(const QuadInt& o) const {
    check_same_ring(o);
    return QuadInt(c_, x_ + o.x_, y_ + o.y_);
}

QuadInt QuadInt::operator-(const QuadInt& o) const {
    check_same_ring(o);
    return QuadInt(c_, x_ - o.x_, y_ - o.y_);
}

QuadInt QuadInt::operator*(const QuadInt& o) const {
    check_same_ring(o);
    /* (x1 + y1 w)(x2 + y2 w) with w^2 = w - c */
    mpz_class yy = y_ * o.y_;
    return QuadInt(c_, x_ * o.x_ - c_ * yy, x_ * o.y_ + y_ * o.x_ + yy);
}

bool QuadInt::operator==(const QuadInt& o) const {
    return c_ == o.c_ && x_ == o.x_ && y_ == o.y_;
}

QuadInt QuadInt::divexact(const QuadInt& d) const {
    check_same_ring(d);
    if (d.is_zero())
        throw domain_error(errc::invalid_argument, "division by zero in quadratic ring");
    QuadInt num = *this * d.conjugate();
    mpz_class n = d.norm();
    QuadInt q(c_, 0, 0);
    if (!mpz_divisible_p(num.x_.get_mpz_t(), n.get_mpz_t()) ||
        !mpz_divisible_p(num.y_.get_mpz_t(), n.get_mpz_t()))
        throw domain_error(errc::internal_check_failed, "inexact quadratic-ring division");
    mpz_divexact(q.x_.get_mpz_t(), num.x_.get_mpz_t(), n.get_mpz_t());
    mpz_divexact(q.y_.get_mpz_t(), num.y_.get_mpz_t(), n.get_mpz_t());
    return q;
}

ZqInt QuadInt::embed(const ZqInt& omega_value) const {
    /* the defining relation must hold for the supplied root */
    ZqInt check = omega_value * omega_value - omega_value +
                  ZqInt(omega_value.p(), omega_value.prec(), c_);
    if (!check.is_zero())
        throw domain_error(errc::not_a_root, "supplied value is not a root of X^2 - X + c",
                           "c=" + std::to_string(c_));
    ZqInt xv(omega_value.p(), omega_value.prec(), x_);
    ZqInt yv(omega_value.p(), omega_value.prec(), y_);
    return xv + yv * omega_value;
}

std::string QuadInt::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    if (x_ != 0) s += x_.get_str();
    if (y_ != 0) {
        if (y_ > 0 && !s.empty()) s += "+";
        if (y_ == -1)
            s += "-";
        else if (y_ != 1)
            s += y_.get_str();
        s += "w";
    }
    return s;
}

} // namespace zqcode
