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

#include "poincare/factor_bag.hpp"
#include "poincare/ratfunc.hpp"
#include "poincare/zpoly.hpp"

namespace poincare {

/// Keeps every nth coefficient: sum a_i z^i maps to sum a_{in} z^i. n >= 1.
ZPoly phi_poly(int n, const ZPoly& p);

enum class PhiStrategy { automatic, product, series };

/// phi_n of a factored rational value. Uses the multisection identity
/// phi_n(G(z) H(z^n)) = phi_n(G) H(z): each denominator factor 1/(1-z^k)
/// is rewritten as Q(z^k)/(1-z^{k n/g}) with g = gcd(k, n), so the result
/// is phi_n(numer * prod Q) over the factor bag {k/g}. Large inputs take
/// an equivalent series route instead of expanding the product. n == 0
/// yields (constant term)/(1-z), the only reading compatible with the
/// diagonal operator at k == n.
FactorBag phi_factored(int n, const FactorBag& value,
                       PhiStrategy strategy = PhiStrategy::automatic);

RatFunc phi_rat(int n, const FactorBag& value);

/// phi_n for a plain rational function; the denominator is refactored by
/// trial division first (flagged fallback through cyclotomic completion
/// when greedy extraction stalls). Throws when no factored form exists.
RatFunc phi_rat(int n, const RatFunc& value);

/// Diagonal extraction of R(z)/(1 - t z^k): phi_{n-k}(R) for k <= n, zero
/// for k > n.
FactorBag psi_simple_factored(int n, int k, const FactorBag& value);
RatFunc psi_simple(int n, int k, const FactorBag& value);

/// Diagonal extraction of R(z)/(1 - t z^k)^2: (z phi_{n-k}(R))' for
/// k <= n, zero for k > n.
FactorBag psi_double_factored(int n, int k, const FactorBag& value);
RatFunc psi_double(int n, int k, const FactorBag& value);

}  // namespace poincare
