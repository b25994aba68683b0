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

#include "poincare/counting.hpp"

#include <map>
#include <stdexcept>

namespace poincare {

namespace {
const mpz_class kZero = 0;
}

FormPair::FormPair(int d1, int d2) : d1_(d1), d2_(d2) {
    if (d1 < 1 || d2 < 1)
        throw std::invalid_argument("FormPair: degrees must be >= 1");
}

std::vector<std::pair<int, int>> shifted_exponents(FormPair p) {
    const int a = p.dmin(), b = p.dmax();
    std::map<int, int> mult;
    for (int i = 0; i <= a; ++i) mult[a + b - 2 * i] += 1;
    for (int j = 0; j <= b; ++j) mult[2 * j] += 1;
    return {mult.begin(), mult.end()};
}

OmegaTable::OmegaTable(FormPair p, int max_degree) : pair_(p), max_n_(max_degree) {
    if (max_degree < 0) throw std::invalid_argument("OmegaTable: negative degree");
    shift_ = pair_.dmax();
    const int smax = 2 * shift_ * max_n_;
    counts_.assign(max_n_ + 1, std::vector<mpz_class>(smax + 1, 0));
    counts_[0][0] = 1;
    for (const auto& [e, m] : shifted_exponents(pair_)) {
        for (int copy = 0; copy < m; ++copy) {
            for (int n = 1; n <= max_n_; ++n) {
                auto& row = counts_[n];
                const auto& prev = counts_[n - 1];
                for (int s = e; s <= smax; ++s) row[s] += prev[s - e];
            }
        }
    }
}

const mpz_class& OmegaTable::omega(int n, int i) const {
    if (n < 0 || n > max_n_) throw std::out_of_range("OmegaTable::omega: degree");
    const long s = static_cast<long>(n) * shift_ + i;
    if (s < 0 || s > 2L * shift_ * n) return kZero;
    return counts_[n][static_cast<size_t>(s)];
}

mpz_class OmegaTable::gamma(int n, int k) const {
    if (k < 0) throw std::invalid_argument("OmegaTable::gamma: negative order");
    return omega(n, k) - omega(n, k + 2);
}

mpz_class OmegaTable::dim_invariants(int n) const { return gamma(n, 0); }

mpz_class OmegaTable::dim_covariants(int n) const {
    return omega(n, 0) + omega(n, 1);
}

mpz_class omega_count(FormPair p, int n, int i) {
    if (n < 0) throw std::invalid_argument("omega_count: negative degree");
    return OmegaTable(p, n).omega(n, i);
}

mpz_class gamma_multiplicity(FormPair p, int n, int k) {
    return OmegaTable(p, n).gamma(n, k);
}

mpz_class dim_invariants(FormPair p, int n) {
    return OmegaTable(p, n).dim_invariants(n);
}

mpz_class dim_covariants(FormPair p, int n) {
    return OmegaTable(p, n).dim_covariants(n);
}

TruncatedOmega::TruncatedOmega(FormPair p, int max_degree) : pair_(p) {
    if (max_degree < 0) throw std::invalid_argument("TruncatedOmega: negative degree");
    coeffs_.assign(max_degree + 1, ZPoly::zero());
    std::vector<std::vector<mpz_class>> acc(max_degree + 1);
    acc[0] = {mpz_class(1)};
    // divide by each (1 - t z^e): b_n += z^e * b_{n-1}
    for (const auto& [e, m] : shifted_exponents(pair_)) {
        for (int copy = 0; copy < m; ++copy) {
            for (int n = 1; n <= max_degree; ++n) {
                const auto& prev = acc[n - 1];
                auto& cur = acc[n];
                if (cur.size() < prev.size() + e) cur.resize(prev.size() + e, 0);
                for (size_t i = 0; i < prev.size(); ++i) cur[i + e] += prev[i];
            }
        }
    }
    for (int n = 0; n <= max_degree; ++n) coeffs_[n] = ZPoly(std::move(acc[n]));
}

const ZPoly& TruncatedOmega::t_coefficient(int n) const {
    if (n < 0 || n >= static_cast<int>(coeffs_.size()))
        throw std::out_of_range("TruncatedOmega::t_coefficient");
    return coeffs_[n];
}

mpz_class TruncatedOmega::omega(int n, int i) const {
    const long s = static_cast<long>(n) * pair_.dmax() + i;
    if (s < 0) return 0;
    return t_coefficient(n).coeff(static_cast<int>(s));
}

std::vector<WeightCount> TruncatedOmega::row(int n) const {
    std::vector<WeightCount> out;
    const ZPoly& c = t_coefficient(n);
    const int shift = n * pair_.dmax();
    for (int s = 0; s <= c.degree(); ++s) {
        if (c.coeff(s) == 0) continue;
        out.push_back(WeightCount{n, s - shift, c.coeff(s)});
    }
    return out;
}

TruncatedOmega truncated_omega(FormPair p, int max_degree) {
    return TruncatedOmega(p, max_degree);
}

}  // namespace poincare
