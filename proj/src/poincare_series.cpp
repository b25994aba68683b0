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

#include "poincare/poincare_series.hpp"

#include <stdexcept>

#include "poincare/multisection.hpp"

namespace poincare {

const char* kind_name(SeriesKind kind) {
    return kind == SeriesKind::invariants ? "invariants" : "covariants";
}

PoincareResult poincare_series(FormPair p, SeriesKind kind) {
    const int n = p.dmax();
    const ZPoly weight = kind == SeriesKind::invariants
                             ? ZPoly{1, 0, -1}   // 1 - z^2
                             : ZPoly{1, 1};      // 1 + z
    FactorBag total = FactorBag::zero();
    for (const PFTerm& term : partial_fractions(shifted_genfun(p))) {
        if (term.exponent > n) {
            // residues above the cutoff carry z^{>n} numerators, so their
            // whole diagonal vanishes, not just the positive-degree part
            if (term.coeff.numer.constant_term() != 0)
                throw std::logic_error(
                    "poincare_series: dropped term with nonzero constant");
            continue;
        }
        const FactorBag weighted = term.coeff * weight;
        const FactorBag part = term.order == 1
                                   ? psi_simple_factored(n, term.exponent, weighted)
                                   : psi_double_factored(n, term.exponent, weighted);
        total = total + part;
    }
    return PoincareResult{p, kind, factored_expand(total), std::nullopt, std::nullopt};
}

void attach_presentation(PoincareResult& result) {
    if (!result.presentation) result.presentation = present(result.value);
}

void attach_series(PoincareResult& result, int terms) {
    if (terms < 0) throw std::invalid_argument("attach_series: negative length");
    if (!result.series || static_cast<int>(result.series->size()) < terms + 1)
        result.series = series_prefix(result.value, terms);
}

}  // namespace poincare
