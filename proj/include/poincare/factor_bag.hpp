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
#include <optional>
#include <vector>

#include "poincare/ratfunc.hpp"
#include "poincare/zpoly.hpp"

namespace poincare {

/// A rational value kept in factored form: numer / prod_k (1 - z^k)^{m_k}.
/// Signs and plain powers of z live in the numerator. This is the carrier
/// used for every partial-fraction residue and multisection intermediate,
/// so denominators never need refactoring.
struct FactorBag {
    ZPoly numer = ZPoly::one();
    std::map<int, int> factors;  // k -> multiplicity, k >= 1, m >= 1

    static FactorBag zero() { return FactorBag{ZPoly::zero(), {}}; }
    static FactorBag from_poly(ZPoly p) { return FactorBag{std::move(p), {}}; }

    bool is_zero() const { return numer.is_zero(); }
    void add_factor(int k, int mult = 1);
    /// Appends (1 - z^a)(1 - z^{a+q}) ... (1 - z^{a+(n-1)q}) to the
    /// denominator; every exponent must be >= 1.
    void add_pochhammer(int a, int q, int n);

    /// The denominator multiplied out.
    ZPoly denominator_poly() const;
    int denominator_degree() const;
    int total_multiplicity() const;
    std::vector<std::pair<int, int>> factor_list() const;
};

FactorBag operator*(const FactorBag& a, const FactorBag& b);
FactorBag operator*(const FactorBag& a, const ZPoly& p);
FactorBag operator+(const FactorBag& a, const FactorBag& b);
FactorBag operator-(const FactorBag& a, const FactorBag& b);

/// d/dz, staying in factored form (one extra copy of each distinct factor).
FactorBag bag_derivative(const FactorBag& f);

/// First len series coefficients of the represented value.
std::vector<mpz_class> bag_series(const FactorBag& f, int len);

/// Multiplies out the denominator and reduces; value-preserving. The
/// reduction cancels cyclotomic factors, which provably yields the RatFunc
/// normal form here since the denominator is a product of cyclotomics.
RatFunc factored_expand(const FactorBag& f);

/// Rebuilds a factored form from a reduced rational function by greedy
/// trial division (largest k first), completing partially cancelled
/// cyclotomic blocks through the numerator when needed. nullopt when the
/// denominator has a factor that divides no z^k - 1.
std::optional<FactorBag> factor_denominator(const RatFunc& r);

}  // namespace poincare
