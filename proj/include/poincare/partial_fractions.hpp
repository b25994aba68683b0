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
#include <vector>

#include "poincare/counting.hpp"
#include "poincare/factor_bag.hpp"
#include "poincare/ratfunc.hpp"

namespace poincare {

/// A rational function of t of the form 1 / prod_e (1 - t z^e)^{m_e};
/// multiplicities are 1 or 2 when built from a pair of form degrees.
struct TFactored {
    std::map<int, int> exponents;  // e -> multiplicity

    int total_multiplicity() const;
    bool operator==(const TFactored& o) const = default;
};

/// Denominator exponents of the generating function after the t -> t z^dmax
/// substitution that clears negative powers. Exponent families
/// {dmin+dmax-2i} and {2j} overlap exactly when the degrees share parity,
/// producing the double poles.
TFactored shifted_genfun(FormPair p);

/// One partial-fraction term coeff / (1 - t z^e)^order.
struct PFTerm {
    int exponent = 0;  // e
    int order = 1;     // 1 or 2
    FactorBag coeff;

    RatFunc value() const { return factored_expand(coeff); }
};

/// Exact partial-fraction decomposition over the simple and double poles.
/// Simple poles take the evaluation g(z^{-e}) of the deflated product; a
/// double pole additionally yields the order-1 coefficient
/// -z^{-e} g'(z^{-e}), with g' obtained from the logarithmic-derivative
/// sum g * sum m_e' z^{e'} / (1 - t z^{e'}). The terms sum back to the
/// input identically.
std::vector<PFTerm> partial_fractions(const TFactored& f);

enum class ResidueFamily { A, B };

/// Closed-form simple-pole coefficients for pairs of distinct degrees with
/// opposite parity, evaluated directly from Pochhammer products as an
/// independent cross-check of partial_fractions. Family A covers the pole
/// exponents dmin+dmax-2k (0 <= k <= dmin), family B the exponents 2k
/// (0 <= k <= dmax). Derivation: substituting t = z^{-e} turns each
/// remaining denominator factor into 1 - z^{e'-e}; factors with e' < e
/// flip as 1/(1 - z^{-m}) = -z^m/(1 - z^m), and collecting the flipped
/// signs and powers gives the products below.
RatFunc closed_form_simple(FormPair p, ResidueFamily family, int k);

}  // namespace poincare
