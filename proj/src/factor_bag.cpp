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

#include "poincare/factor_bag.hpp"

#include <stdexcept>

namespace poincare {

namespace {

// p * (1 - z^k)
ZPoly mul_one_minus_zk(const ZPoly& p, int k) {
    if (p.is_zero()) return {};
    std::vector<mpz_class> out(p.coeffs().size() + k);
    for (size_t i = 0; i < p.coeffs().size(); ++i) {
        out[i] += p.coeffs()[i];
        out[i + k] -= p.coeffs()[i];
    }
    return ZPoly(std::move(out));
}

ZPoly expand_factors(const std::map<int, int>& factors) {
    ZPoly acc = ZPoly::one();
    for (const auto& [k, m] : factors)
        for (int i = 0; i < m; ++i) acc = mul_one_minus_zk(acc, k);
    return acc;
}

int euler_phi(int n) {
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

}  // namespace

void FactorBag::add_factor(int k, int mult) {
    if (k < 1 || mult < 1) throw std::invalid_argument("FactorBag::add_factor");
    factors[k] += mult;
}

void FactorBag::add_pochhammer(int a, int q, int n) {
    for (int j = 0; j < n; ++j) {
        const int k = a + q * j;
        if (k < 1) throw std::invalid_argument("FactorBag::add_pochhammer: exponent < 1");
        add_factor(k);
    }
}

ZPoly FactorBag::denominator_poly() const { return expand_factors(factors); }

int FactorBag::denominator_degree() const {
    int d = 0;
    for (const auto& [k, m] : factors) d += k * m;
    return d;
}

int FactorBag::total_multiplicity() const {
    int t = 0;
    for (const auto& [k, m] : factors) t += m;
    return t;
}

std::vector<std::pair<int, int>> FactorBag::factor_list() const {
    return {factors.begin(), factors.end()};
}

FactorBag operator*(const FactorBag& a, const FactorBag& b) {
    if (a.is_zero() || b.is_zero()) return FactorBag::zero();
    FactorBag r;
    r.numer = a.numer * b.numer;
    r.factors = a.factors;
    for (const auto& [k, m] : b.factors) r.factors[k] += m;
    return r;
}

FactorBag operator*(const FactorBag& a, const ZPoly& p) {
    if (a.is_zero() || p.is_zero()) return FactorBag::zero();
    FactorBag r = a;
    r.numer = r.numer * p;
    return r;
}

FactorBag operator+(const FactorBag& a, const FactorBag& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    FactorBag r;
    r.factors = a.factors;
    for (const auto& [k, m] : b.factors) {
        auto it = r.factors.find(k);
        if (it == r.factors.end()) r.factors[k] = m;
        else it->second = std::max(it->second, m);
    }
    auto lift = [&r](const FactorBag& f) {
        ZPoly n = f.numer;
        for (const auto& [k, m] : r.factors) {
            auto it = f.factors.find(k);
            const int have = it == f.factors.end() ? 0 : it->second;
            for (int i = have; i < m; ++i) n = mul_one_minus_zk(n, k);
        }
        return n;
    };
    r.numer = lift(a) + lift(b);
    if (r.numer.is_zero()) return FactorBag::zero();
    return r;
}

FactorBag operator-(const FactorBag& a, const FactorBag& b) {
    FactorBag nb = b;
    nb.numer = -nb.numer;
    return a + nb;
}

FactorBag bag_derivative(const FactorBag& f) {
    if (f.is_zero()) return FactorBag::zero();
    if (f.factors.empty()) return FactorBag::from_poly(poly_derivative(f.numer));
    ZPoly all = ZPoly::one();
    for (const auto& [k, m] : f.factors) all = mul_one_minus_zk(all, k);
    ZPoly acc = poly_derivative(f.numer) * all;
    for (const auto& [k, m] : f.factors) {
        ZPoly cof = *divide_exact(all, one_minus_zk(k));
        acc += (f.numer * cof).scaled(mpz_class(k) * m).shifted(k - 1);
    }
    FactorBag r;
    r.numer = std::move(acc);
    if (r.numer.is_zero()) return FactorBag::zero();
    r.factors = f.factors;
    for (auto& [k, m] : r.factors) m += 1;
    return r;
}

std::vector<mpz_class> bag_series(const FactorBag& f, int len) {
    return geometric_series_prefix(f.numer, f.factor_list(), len);
}

RatFunc factored_expand(const FactorBag& f) {
    if (f.is_zero()) return RatFunc::zero();
    // multiplicity of each cyclotomic in the expanded denominator
    std::map<int, int> cyc;
    for (const auto& [k, m] : f.factors)
        for (int d = 1; d <= k; ++d)
            if (k % d == 0) cyc[d] += m;
    // prod (1 - z^k)^m = (-1)^{total} prod Phi_d^{cyc_d}
    ZPoly num = f.total_multiplicity() % 2 == 1 ? -f.numer : f.numer;
    for (auto& [d, m] : cyc) {
        const ZPoly& phi = cyclotomic(d);
        while (m > 0) {
            auto q = divide_exact(num, phi);
            if (!q) break;
            num = std::move(*q);
            --m;
        }
    }
    ZPoly den = ZPoly::one();
    for (const auto& [d, m] : cyc)
        for (int i = 0; i < m; ++i) den *= cyclotomic(d);
    return RatFunc::from_reduced(std::move(num), std::move(den));
}

std::optional<FactorBag> factor_denominator(const RatFunc& r) {
    if (r.is_zero()) return FactorBag::zero();
    FactorBag bag;
    bag.numer = r.num();
    ZPoly work = r.den();
    for (int k = work.degree(); k >= 1; --k) {
        while (work.degree() >= k) {
            auto q = divide_exact(work, one_minus_zk(k));
            if (!q) break;
            work = std::move(*q);
            bag.add_factor(k);
        }
        if (work.degree() < 1) break;
    }
    if (work.degree() >= 1) {
        // Leftover cyclotomic factors: each copy of Phi_d equals
        // -(1 - z^d) / prod_{e | d, e < d} Phi_e, so the missing divisors
        // move into the numerator.
        const int dmax = 2 * work.degree() * work.degree() + 2;
        for (int d = 1; d <= dmax && work.degree() >= 1; ++d) {
            if (euler_phi(d) > work.degree()) continue;
            const ZPoly phi = cyclotomic(d);
            while (true) {
                auto q = divide_exact(work, phi);
                if (!q) break;
                work = std::move(*q);
                ZPoly cof = *divide_exact(-one_minus_zk(d), phi);
                bag.numer = -(bag.numer * cof);
                bag.add_factor(d);
            }
        }
        if (work.degree() >= 1) return std::nullopt;
    }
    // constant remainder: only units fold into the numerator
    const mpz_class c = work.constant_term();
    if (c == 1) return bag;
    if (c == -1) {
        bag.numer = -bag.numer;
        return bag;
    }
    return std::nullopt;
}

}  // namespace poincare
