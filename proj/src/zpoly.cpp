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

#include "poincare/zpoly.hpp"

#include <mutex>
#include <ostream>
#include <stdexcept>

namespace poincare {

namespace {
const mpz_class kZero = 0;
}

ZPoly::ZPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

ZPoly::ZPoly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

ZPoly ZPoly::constant(mpz_class c) {
    ZPoly p;
    if (c != 0) p.coeffs_.push_back(std::move(c));
    return p;
}

ZPoly ZPoly::monomial(mpz_class c, int exp) {
    if (exp < 0) throw std::invalid_argument("ZPoly::monomial: negative exponent");
    ZPoly p;
    if (c != 0) {
        p.coeffs_.assign(static_cast<size_t>(exp) + 1, 0);
        p.coeffs_.back() = std::move(c);
    }
    return p;
}

ZPoly ZPoly::from_terms(const std::vector<std::pair<int, mpz_class>>& terms) {
    ZPoly p;
    for (const auto& [exp, c] : terms) {
        if (exp < 0) throw std::invalid_argument("ZPoly::from_terms: negative exponent");
        if (p.coeffs_.size() <= static_cast<size_t>(exp)) p.coeffs_.resize(exp + 1, 0);
        p.coeffs_[exp] += c;
    }
    p.trim();
    return p;
}

const mpz_class& ZPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[i];
}

void ZPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

ZPoly ZPoly::operator-() const {
    ZPoly r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

ZPoly& ZPoly::operator+=(const ZPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpz_class> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (sgn(a.coeffs_[i]) == 0) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (sgn(b.coeffs_[j]) == 0) continue;
            mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(),
                       b.coeffs_[j].get_mpz_t());
        }
    }
    return ZPoly(std::move(out));
}

ZPoly& ZPoly::operator*=(const ZPoly& o) {
    *this = *this * o;
    return *this;
}

ZPoly ZPoly::scaled(const mpz_class& c) const {
    if (c == 0) return {};
    ZPoly r(*this);
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

ZPoly ZPoly::shifted(int exp) const {
    if (exp == 0 || is_zero()) return *this;
    if (exp < 0) return unshifted(-exp);
    ZPoly r;
    r.coeffs_.assign(static_cast<size_t>(exp), 0);
    r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
    return r;
}

ZPoly ZPoly::unshifted(int exp) const {
    if (exp <= 0 || is_zero()) {
        if (exp < 0) return shifted(-exp);
        return *this;
    }
    if (static_cast<size_t>(exp) > coeffs_.size())
        throw std::domain_error("ZPoly::unshifted: not divisible by z^exp");
    for (int i = 0; i < exp; ++i)
        if (coeffs_[i] != 0)
            throw std::domain_error("ZPoly::unshifted: not divisible by z^exp");
    ZPoly r;
    r.coeffs_.assign(coeffs_.begin() + exp, coeffs_.end());
    return r;
}

ZPoly ZPoly::times_ones(int k, int len) const {
    if (k < 1 || len < 1) throw std::invalid_argument("ZPoly::times_ones");
    if (len == 1 || is_zero()) return *this;
    std::vector<mpz_class> out(coeffs_.size() + static_cast<size_t>(k) * (len - 1));
    for (int j = 0; j < len; ++j) {
        const size_t off = static_cast<size_t>(k) * j;
        for (size_t i = 0; i < coeffs_.size(); ++i) out[off + i] += coeffs_[i];
    }
    return ZPoly(std::move(out));
}

mpz_class ZPoly::eval(const mpz_class& x) const {
    mpz_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::ostream& operator<<(std::ostream& os, const ZPoly& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        const mpz_class& c = p.coeff(i);
        if (c == 0) continue;
        if (!first) os << (sgn(c) > 0 ? " + " : " - ");
        else if (sgn(c) < 0) os << "-";
        first = false;
        mpz_class a = abs(c);
        if (i == 0 || a != 1) os << a.get_str();
        if (i > 0) {
            os << "z";
            if (i > 1) os << "^" << i;
        }
    }
    return os;
}

ZPoly poly_mul(const ZPoly& p, const ZPoly& q) { return p * q; }

ZPoly poly_derivative(const ZPoly& p) {
    if (p.degree() < 1) return {};
    std::vector<mpz_class> out(p.degree());
    for (int i = 1; i <= p.degree(); ++i) out[i - 1] = p.coeff(i) * i;
    return ZPoly(std::move(out));
}

ZPoly one_minus_zk(int k) {
    if (k < 1) throw std::invalid_argument("one_minus_zk: k must be >= 1");
    std::vector<mpz_class> c(static_cast<size_t>(k) + 1, 0);
    c[0] = 1;
    c[k] = -1;
    return ZPoly(std::move(c));
}

std::optional<ZPoly> divide_exact(const ZPoly& a, const ZPoly& b) {
    if (b.is_zero()) throw std::domain_error("divide_exact: zero divisor");
    if (a.is_zero()) return ZPoly{};
    if (a.degree() < b.degree()) return std::nullopt;
    std::vector<mpz_class> rem = a.coeffs();
    std::vector<mpz_class> quot(a.degree() - b.degree() + 1);
    const mpz_class& lead = b.leading();
    for (int i = a.degree(); i >= b.degree(); --i) {
        if (sgn(rem[i]) == 0) continue;
        mpz_class q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem[i].get_mpz_t(), lead.get_mpz_t());
        if (r != 0) return std::nullopt;
        quot[i - b.degree()] = q;
        for (int j = 0; j <= b.degree(); ++j)
            mpz_submul(rem[i - b.degree() + j].get_mpz_t(), q.get_mpz_t(),
                       b.coeff(j).get_mpz_t());
    }
    for (const auto& c : rem)
        if (c != 0) return std::nullopt;
    return ZPoly(std::move(quot));
}

mpz_class poly_content(const ZPoly& p) {
    mpz_class g = 0;
    for (const auto& c : p.coeffs()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

ZPoly primitive_part(const ZPoly& p) {
    if (p.is_zero()) return {};
    mpz_class c = poly_content(p);
    if (c == 1) return p;
    std::vector<mpz_class> out(p.coeffs().size());
    for (size_t i = 0; i < out.size(); ++i)
        mpz_divexact(out[i].get_mpz_t(), p.coeffs()[i].get_mpz_t(), c.get_mpz_t());
    return ZPoly(std::move(out));
}

namespace {

// lc(b)^{deg a - deg b + 1} * a mod b; requires deg a >= deg b >= 0.
ZPoly pseudo_rem(const ZPoly& a, const ZPoly& b) {
    std::vector<mpz_class> rem = a.coeffs();
    const int db = b.degree();
    const mpz_class& lead = b.leading();
    for (int i = a.degree(); i >= db; --i) {
        mpz_class top = rem[i];
        for (int j = 0; j < i; ++j) rem[j] *= lead;
        if (sgn(top) != 0) {
            for (int j = 0; j < db; ++j)
                mpz_submul(rem[i - db + j].get_mpz_t(), top.get_mpz_t(),
                           b.coeff(j).get_mpz_t());
        }
        rem[i] = 0;
    }
    return ZPoly{std::move(rem)};
}

}  // namespace

ZPoly poly_gcd(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() && b.is_zero()) return {};
    mpz_class ca = poly_content(a), cb = poly_content(b), c;
    mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    auto canonical = [](ZPoly p) {
        p = primitive_part(p);
        if (!p.is_zero() && sgn(p.leading()) < 0) p = -p;
        return p;
    };
    if (a.is_zero()) return canonical(b).scaled(c);
    if (b.is_zero()) return canonical(a).scaled(c);

    ZPoly r0 = primitive_part(a), r1 = primitive_part(b);
    if (r0.degree() < r1.degree()) std::swap(r0, r1);
    mpz_class g = 1, h = 1;
    while (true) {
        if (r1.is_zero()) return canonical(r0).scaled(c);
        if (r1.degree() == 0) return ZPoly::constant(c);
        const int delta = r0.degree() - r1.degree();
        ZPoly rem = pseudo_rem(r0, r1);
        r0 = r1;
        // divide by g * h^delta
        mpz_class hp;
        mpz_pow_ui(hp.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
        mpz_class div = g * hp;
        if (!rem.is_zero()) {
            std::vector<mpz_class> cs(rem.coeffs().size());
            for (size_t i = 0; i < cs.size(); ++i)
                mpz_divexact(cs[i].get_mpz_t(), rem.coeffs()[i].get_mpz_t(),
                             div.get_mpz_t());
            r1 = ZPoly(std::move(cs));
        } else {
            r1 = ZPoly{};
        }
        g = r0.leading();
        mpz_class gp;
        mpz_pow_ui(gp.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(delta));
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = gp;
        } else {
            mpz_class hq;
            mpz_pow_ui(hq.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
            mpz_divexact(h.get_mpz_t(), gp.get_mpz_t(), hq.get_mpz_t());
        }
    }
}

ZPoly cyclotomic(int n) {
    if (n < 1) throw std::invalid_argument("cyclotomic: n must be >= 1");
    static std::mutex mu;
    static std::vector<ZPoly> cache;  // cache[n] for n >= 1
    std::lock_guard<std::mutex> lock(mu);
    if (static_cast<size_t>(n) < cache.size() && !cache[n].is_zero()) return cache[n];
    if (cache.size() <= static_cast<size_t>(n)) cache.resize(n + 1);
    // Phi_n = (z^n - 1) / prod_{d | n, d < n} Phi_d, filling lower orders first.
    for (int m = 1; m <= n; ++m) {
        if (!cache[m].is_zero()) continue;
        ZPoly num = -one_minus_zk(m);
        for (int d = 1; d < m; ++d) {
            if (m % d != 0) continue;
            auto q = divide_exact(num, cache[d]);
            num = std::move(*q);
        }
        cache[m] = std::move(num);
    }
    return cache[n];
}

}  // namespace poincare
