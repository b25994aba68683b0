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

#pragma once

#include <map>
#include <random>
#include <vector>

#include "poincare/factor_bag.hpp"
#include "poincare/partial_fractions.hpp"
#include "poincare/ratfunc.hpp"
#include "poincare/zpoly.hpp"

namespace poincare::testsupport {

inline ZPoly random_poly(std::mt19937& rng, int max_deg, int max_abs = 9) {
    std::uniform_int_distribution<int> pick_deg(0, max_deg);
    std::uniform_int_distribution<int> pick_coef(-max_abs, max_abs);
    std::vector<mpz_class> c(pick_deg(rng) + 1);
    for (auto& x : c) x = pick_coef(rng);
    return ZPoly(std::move(c));
}

inline ZPoly random_nonzero_poly(std::mt19937& rng, int max_deg, int max_abs = 9) {
    while (true) {
        ZPoly p = random_poly(rng, max_deg, max_abs);
        if (!p.is_zero()) return p;
    }
}

inline FactorBag random_bag(std::mt19937& rng, int max_k = 12, int max_mult = 3,
                            int max_numer_deg = 6) {
    std::uniform_int_distribution<int> pick_count(1, 4);
    std::uniform_int_distribution<int> pick_k(1, max_k);
    std::uniform_int_distribution<int> pick_mult(1, max_mult);
    FactorBag bag;
    bag.numer = random_nonzero_poly(rng, max_numer_deg, 5);
    const int count = pick_count(rng);
    for (int i = 0; i < count; ++i) bag.add_factor(pick_k(rng), pick_mult(rng));
    return bag;
}

// Truncated product of two coefficient prefixes (independent of the
// library's division-based series code).
inline std::vector<mpz_class> truncated_product(const std::vector<mpz_class>& a,
                                                const std::vector<mpz_class>& b,
                                                int len) {
    std::vector<mpz_class> out(len, 0);
    for (int i = 0; i < len && i < static_cast<int>(a.size()); ++i)
        for (int j = 0; i + j < len && j < static_cast<int>(b.size()); ++j)
            out[i + j] += a[i] * b[j];
    return out;
}

// Prefix of 1/(1 - z^k) by writing the geometric series down directly.
inline std::vector<mpz_class> geometric_prefix(int k, int len) {
    std::vector<mpz_class> out(len, 0);
    for (int i = 0; i < len; i += k) out[i] = 1;
    return out;
}

// Exhaustive enumeration of degree-n monomials by total weight over the
// given variable weights; the ground truth for the counting module at tiny
// sizes.
inline void enumerate_monomials(const std::vector<int>& weights, size_t idx,
                                int remaining, long weight,
                                std::map<long, long>& acc) {
    if (idx == weights.size()) {
        if (remaining == 0) acc[weight] += 1;
        return;
    }
    for (int c = 0; c <= remaining; ++c)
        enumerate_monomials(weights, idx + 1, remaining - c,
                            weight + static_cast<long>(c) * weights[idx], acc);
}

inline std::map<long, long> weight_histogram(int d1, int d2, int n) {
    std::vector<int> weights;
    for (int i = 0; i <= d1; ++i) weights.push_back(d1 - 2 * i);
    for (int j = 0; j <= d2; ++j) weights.push_back(d2 - 2 * j);
    std::map<long, long> acc;
    enumerate_monomials(weights, 0, n, 0, acc);
    return acc;
}

// Diagonal extraction oracle: first `count` coefficients of the diagonal
// of R(z) / (1 - t z^k)^order, straight from the definition. The t^s
// coefficient of the input is (s+1)^{order-1} R(z) z^{ks}, so the diagonal
// entry at z^s is that factor times the z^{s(n-k)} coefficient of R.
inline std::vector<mpz_class> diagonal_series_oracle(const FactorBag& value,
                                                     int n, int k, int order,
                                                     int count) {
    const int span = n - k;
    const int need = span > 0 ? span * (count - 1) + 1 : 1;
    const std::vector<mpz_class> rs = bag_series(value, need);
    std::vector<mpz_class> out(count, 0);
    for (int s = 0; s < count; ++s) {
        const long j = static_cast<long>(s) * span;
        if (j < 0) continue;  // no such coefficient in a power series
        mpz_class v = j < need ? rs[j] : 0;
        if (order == 2) v *= s + 1;
        out[s] = v;
    }
    return out;
}

// Exact partial-fraction reconstruction check: clears all denominators and
// compares polynomial identities in t and z. With F = prod (1 - t z^e)^m
// and a common z-denominator Z, the terms must satisfy
//   sum_k numer_k (Z / bag_k) F / (1 - t z^{e_k})^{ord_k} = Z.
inline bool reconstruction_holds(const TFactored& f) {
    const std::vector<PFTerm> terms = partial_fractions(f);
    FactorBag lcm;
    for (const auto& t : terms)
        for (const auto& [k, m] : t.coeff.factors) {
            auto it = lcm.factors.find(k);
            if (it == lcm.factors.end()) lcm.factors[k] = m;
            else it->second = std::max(it->second, m);
        }
    const ZPoly big_z = lcm.denominator_poly();

    using TPoly = std::vector<ZPoly>;  // coefficients by t-power
    auto times_factor = [](const TPoly& a, int e) {  // * (1 - t z^e)
        TPoly out(a.size() + 1);
        for (size_t i = 0; i < a.size(); ++i) {
            out[i] += a[i];
            out[i + 1] -= a[i].shifted(e);
        }
        return out;
    };

    TPoly total;
    for (const auto& t : terms) {
        TPoly deflated{ZPoly::one()};
        for (const auto& [e, m] : f.exponents) {
            const int copies = m - (e == t.exponent ? t.order : 0);
            for (int c = 0; c < copies; ++c) deflated = times_factor(deflated, e);
        }
        FactorBag cof_bag;
        cof_bag.factors = lcm.factors;
        for (const auto& [k, m] : t.coeff.factors) {
            cof_bag.factors[k] -= m;
            if (cof_bag.factors[k] == 0) cof_bag.factors.erase(k);
        }
        const ZPoly scale = t.coeff.numer * cof_bag.denominator_poly();
        if (total.size() < deflated.size()) total.resize(deflated.size());
        for (size_t i = 0; i < deflated.size(); ++i) total[i] += deflated[i] * scale;
    }
    if (total.empty()) return big_z.is_zero();
    if (total[0] != big_z) return false;
    for (size_t i = 1; i < total.size(); ++i)
        if (!total[i].is_zero()) return false;
    return true;
}

}  // namespace poincare::testsupport
