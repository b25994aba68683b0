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

#include "poincare/multisection.hpp"

#include <iostream>
#include <numeric>
#include <stdexcept>

namespace poincare {

ZPoly phi_poly(int n, const ZPoly& p) {
    if (n < 1) throw std::invalid_argument("phi_poly: section index must be >= 1");
    if (n == 1 || p.is_zero()) return p;
    std::vector<mpz_class> out(static_cast<size_t>(p.degree() / n) + 1);
    for (size_t i = 0; i < out.size(); ++i) out[i] = p.coeff(static_cast<int>(i) * n);
    return ZPoly(std::move(out));
}

namespace {

struct PhiPlan {
    // per input factor: k, multiplicity, reduced section length m/g, k/g
    struct Entry {
        int k, mult, qlen, kred;
    };
    std::vector<Entry> entries;
    std::map<int, int> result_factors;
    long product_degree = 0;  // degree of numer * prod Q
};

PhiPlan make_plan(int n, const FactorBag& value) {
    PhiPlan plan;
    plan.product_degree = value.numer.degree();
    for (const auto& [k, m] : value.factors) {
        const int g = std::gcd(k, n);
        const int qlen = n / g;
        plan.entries.push_back({k, m, qlen, k / g});
        plan.result_factors[k / g] += m;
        plan.product_degree += static_cast<long>(k) * (qlen - 1) * m;
    }
    return plan;
}

FactorBag phi_by_product(int n, const FactorBag& value, const PhiPlan& plan) {
    ZPoly p = value.numer;
    for (const auto& e : plan.entries)
        for (int c = 0; c < e.mult; ++c)
            if (e.qlen > 1) p = p.times_ones(e.k, e.qlen);
    FactorBag out;
    out.numer = phi_poly(n, p);
    if (out.numer.is_zero()) return FactorBag::zero();
    out.factors = plan.result_factors;
    return out;
}

FactorBag phi_by_series(int n, const FactorBag& value, const PhiPlan& plan) {
    const long out_degree = plan.product_degree / n;
    const long len = out_degree * n + 1;
    if (len > (1L << 28)) throw std::length_error("phi_factored: series too long");
    std::vector<mpz_class> s =
        geometric_series_prefix(value.numer, value.factor_list(), static_cast<int>(len));
    std::vector<mpz_class> dec(static_cast<size_t>(out_degree) + 1);
    for (long j = 0; j <= out_degree; ++j) dec[j] = std::move(s[j * n]);
    FactorBag out;
    out.factors = plan.result_factors;
    const ZPoly den = out.denominator_poly();
    // numerator = multisected series * denominator, a polynomial of degree
    // <= out_degree; higher convolution terms cancel identically.
    std::vector<mpz_class> num(static_cast<size_t>(out_degree) + 1, 0);
    for (long i = 0; i <= out_degree; ++i) {
        for (int j = 0; j <= den.degree() && j <= i; ++j)
            mpz_addmul(num[i].get_mpz_t(), den.coeff(j).get_mpz_t(),
                       dec[i - j].get_mpz_t());
    }
    out.numer = ZPoly(std::move(num));
    if (out.numer.is_zero()) return FactorBag::zero();
    return out;
}

}  // namespace

FactorBag phi_factored(int n, const FactorBag& value, PhiStrategy strategy) {
    if (n < 0) throw std::invalid_argument("phi_factored: negative section index");
    if (value.is_zero()) return FactorBag::zero();
    if (n == 0) {
        FactorBag out;
        out.numer = ZPoly::constant(value.numer.constant_term());
        if (out.numer.is_zero()) return FactorBag::zero();
        out.add_factor(1);
        return out;
    }
    if (n == 1) return value;
    PhiPlan plan = make_plan(n, value);
    if (strategy == PhiStrategy::product) return phi_by_product(n, value, plan);
    if (strategy == PhiStrategy::series) return phi_by_series(n, value, plan);
    // The product route touches ~product_degree coefficients per factor
    // copy; the series route is linear in product_degree. Crossover chosen
    // by measurement, weakly.
    return plan.product_degree > 8192 ? phi_by_series(n, value, plan)
                                      : phi_by_product(n, value, plan);
}

RatFunc phi_rat(int n, const FactorBag& value) {
    return factored_expand(phi_factored(n, value));
}

RatFunc phi_rat(int n, const RatFunc& value) {
    auto bag = factor_denominator(value);
    if (!bag)
        throw std::domain_error("phi_rat: denominator admits no (1 - z^k) form");
    if (!bag->factors.empty() && bag->numer != value.num())
        std::clog << "phi_rat: denominator refactored through cyclotomic completion\n";
    return phi_rat(n, *bag);
}

FactorBag psi_simple_factored(int n, int k, const FactorBag& value) {
    if (n < 1 || k < 0) throw std::invalid_argument("psi_simple: bad indices");
    if (k > n) return FactorBag::zero();
    return phi_factored(n - k, value);
}

RatFunc psi_simple(int n, int k, const FactorBag& value) {
    return factored_expand(psi_simple_factored(n, k, value));
}

FactorBag psi_double_factored(int n, int k, const FactorBag& value) {
    if (n < 1 || k < 0) throw std::invalid_argument("psi_double: bad indices");
    if (k > n) return FactorBag::zero();
    FactorBag inner = phi_factored(n - k, value);
    inner.numer = inner.numer.shifted(1);
    return bag_derivative(inner);
}

RatFunc psi_double(int n, int k, const FactorBag& value) {
    return factored_expand(psi_double_factored(n, k, value));
}

}  // namespace poincare
