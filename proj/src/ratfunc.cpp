/*
   Copyright 2026 The poincare-series authors

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

#include "poincare/ratfunc.hpp"

#include <ostream>
#include <stdexcept>

namespace poincare {

RatFunc::RatFunc(ZPoly num, ZPoly den) {
    if (den.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    if (num.is_zero()) {
        num_ = ZPoly::zero();
        den_ = ZPoly::one();
        return;
    }
    ZPoly g = poly_gcd(num, den);
    if (g.degree() > 0 || (!g.is_zero() && g.leading() != 1)) {
        num_ = *divide_exact(num, g);
        den_ = *divide_exact(den, g);
    } else {
        num_ = std::move(num);
        den_ = std::move(den);
    }
    apply_sign_content();
}

RatFunc::RatFunc(ZPoly num, ZPoly den, reduced_tag)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    if (num_.is_zero()) {
        den_ = ZPoly::one();
        return;
    }
    apply_sign_content();
}

void RatFunc::apply_sign_content() {
    mpz_class cn = poly_content(num_), cd = poly_content(den_), c;
    mpz_gcd(c.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (c > 1) {
        std::vector<mpz_class> n(num_.coeffs().size()), d(den_.coeffs().size());
        for (size_t i = 0; i < n.size(); ++i)
            mpz_divexact(n[i].get_mpz_t(), num_.coeffs()[i].get_mpz_t(), c.get_mpz_t());
        for (size_t i = 0; i < d.size(); ++i)
            mpz_divexact(d[i].get_mpz_t(), den_.coeffs()[i].get_mpz_t(), c.get_mpz_t());
        num_ = ZPoly(std::move(n));
        den_ = ZPoly(std::move(d));
    }
    int low = 0;
    while (den_.coeff(low) == 0) ++low;
    if (sgn(den_.coeff(low)) < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RatFunc RatFunc::from_poly(ZPoly p) {
    return RatFunc(std::move(p), ZPoly::one(), reduced_tag{});
}

RatFunc RatFunc::from_reduced(ZPoly num, ZPoly den) {
    return RatFunc(std::move(num), std::move(den), reduced_tag{});
}

RatFunc RatFunc::operator-() const {
    RatFunc r(*this);
    r.num_ = -r.num_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return rat_normalize(a.num() * b.den() + b.num() * a.den(), a.den() * b.den());
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return rat_normalize(a.num() * b.den() - b.num() * a.den(), a.den() * b.den());
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return rat_normalize(a.num() * b.num(), a.den() * b.den());
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
    return rat_normalize(a.num() * b.den(), a.den() * b.num());
}

std::ostream& operator<<(std::ostream& os, const RatFunc& r) {
    return os << "(" << r.num() << ")/(" << r.den() << ")";
}

RatFunc rat_normalize(ZPoly num, ZPoly den) {
    return RatFunc(std::move(num), std::move(den));
}

RatFunc rat_arith(const RatFunc& a, const RatFunc& b, RatOp op) {
    switch (op) {
        case RatOp::add: return a + b;
        case RatOp::sub: return a - b;
        case RatOp::mul: return a * b;
        case RatOp::div: return a / b;
    }
    throw std::invalid_argument("rat_arith: unknown op");
}

std::vector<mpz_class> series_prefix(const RatFunc& r, int n) {
    if (n < 0) throw std::invalid_argument("series_prefix: negative length");
    const ZPoly& den = r.den();
    if (den.constant_term() == 0)
        throw std::domain_error("series_prefix: denominator vanishes at z = 0");
    const mpz_class& d0 = den.constant_term();
    std::vector<mpz_class> out(static_cast<size_t>(n) + 1, 0);
    for (int i = 0; i <= n; ++i) {
        mpz_class acc = r.num().coeff(i);
        const int jmax = std::min(i, den.degree());
        for (int j = 1; j <= jmax; ++j)
            mpz_submul(acc.get_mpz_t(), den.coeff(j).get_mpz_t(),
                       out[i - j].get_mpz_t());
        if (d0 == 1) {
            out[i] = std::move(acc);
        } else if (d0 == -1) {
            out[i] = -acc;
        } else {
            mpz_class q, rem;
            mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), acc.get_mpz_t(), d0.get_mpz_t());
            if (rem != 0)
                throw std::domain_error("series_prefix: non-integral coefficient");
            out[i] = std::move(q);
        }
    }
    return out;
}

std::vector<mpz_class> geometric_series_prefix(
    const ZPoly& num, const std::vector<std::pair<int, int>>& factors, int len) {
    if (len <= 0) return {};
    std::vector<mpz_class> s(static_cast<size_t>(len), 0);
    const int copy = std::min<int>(len, static_cast<int>(num.coeffs().size()));
    for (int i = 0; i < copy; ++i) s[i] = num.coeffs()[i];
    for (const auto& [k, mult] : factors) {
        for (int m = 0; m < mult; ++m)
            for (int i = k; i < len; ++i) s[i] += s[i - k];
    }
    return s;
}

}  // namespace poincare
