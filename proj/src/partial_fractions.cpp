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

#include "poincare/partial_fractions.hpp"

#include <cassert>
#include <stdexcept>

namespace poincare {

int TFactored::total_multiplicity() const {
    int t = 0;
    for (const auto& [e, m] : exponents) t += m;
    return t;
}

TFactored shifted_genfun(FormPair p) {
    TFactored f;
    for (const auto& [e, m] : shifted_exponents(p)) f.exponents[e] = m;
    return f;
}

namespace {

// Evaluation at t = z^{-e} of prod_{e' != e} (1 - t z^{e'})^{-m'}, kept
// factored. Factors with e' < e flip: 1/(1 - z^{-m}) = -z^m/(1 - z^m).
FactorBag deflated_at_pole(const TFactored& f, int e) {
    FactorBag g;
    int zpow = 0;
    bool negate = false;
    for (const auto& [ep, m] : f.exponents) {
        if (ep == e) continue;
        const int diff = ep - e;
        if (diff > 0) {
            g.add_factor(diff, m);
        } else {
            assert(diff != 0);
            g.add_factor(-diff, m);
            zpow += m * (-diff);
            if (m % 2 == 1) negate = !negate;
        }
    }
    g.numer = ZPoly::monomial(negate ? -1 : 1, zpow);
    return g;
}

// sum over e' != e of m' z^{e'} / (1 - z^{e'-e}), the logarithmic
// t-derivative of the deflated product at the pole.
FactorBag pole_log_derivative(const TFactored& f, int e) {
    FactorBag sum = FactorBag::zero();
    for (const auto& [ep, m] : f.exponents) {
        if (ep == e) continue;
        FactorBag term;
        if (ep > e) {
            term.numer = ZPoly::monomial(m, ep);
            term.add_factor(ep - e);
        } else {
            // m z^{e'} * (-z^{e-e'}) / (1 - z^{e-e'}) = -m z^e / (1 - z^{e-e'})
            term.numer = ZPoly::monomial(-m, e);
            term.add_factor(e - ep);
        }
        sum = sum + term;
    }
    return sum;
}

}  // namespace

std::vector<PFTerm> partial_fractions(const TFactored& f) {
    std::vector<PFTerm> terms;
    for (const auto& [e, m] : f.exponents) {
        if (m != 1 && m != 2)
            throw std::invalid_argument("partial_fractions: multiplicity must be 1 or 2");
        FactorBag top = deflated_at_pole(f, e);
        if (m == 1) {
            terms.push_back(PFTerm{e, 1, std::move(top)});
            continue;
        }
        FactorBag slope = pole_log_derivative(f, e);
        FactorBag order1 = top * slope;
        // -z^{-e} g'(z^{-e}): every numerator term carries z^{>=e}
        order1.numer = -order1.numer.unshifted(e);
        terms.push_back(PFTerm{e, 1, std::move(order1)});
        terms.push_back(PFTerm{e, 2, std::move(top)});
    }
    return terms;
}

RatFunc closed_form_simple(FormPair p, ResidueFamily family, int k) {
    const int d1 = p.dmin(), d2 = p.dmax();
    if (d1 == d2 || (d2 - d1) % 2 == 0)
        throw std::invalid_argument(
            "closed_form_simple: degrees must differ and have opposite parity");
    FactorBag bag;
    bool negate = false;
    int zpow = 0;
    if (family == ResidueFamily::A) {
        if (k < 0 || k > d1)
            throw std::invalid_argument("closed_form_simple: k out of range for family A");
        // pole exponent d1 + d2 - 2k; nu factors of the even family flip
        const int nu = (d1 + d2 + 1) / 2 - k;
        negate = ((d1 - k + nu) % 2) == 1;
        zpow = (d1 - k) * (d1 - k + 1) + nu * nu;
        if (k > 0) bag.add_pochhammer(2, 2, k);
        if (d1 - k > 0) bag.add_pochhammer(2, 2, d1 - k);
        bag.add_pochhammer(1, 2, nu);
        bag.add_pochhammer(1, 2, d2 + 1 - nu);
    } else {
        if (k < 0 || k > d2)
            throw std::invalid_argument("closed_form_simple: k out of range for family B");
        // pole exponent 2k; the even family contributes k flips
        negate = (k % 2) == 1;
        zpow = k * (k + 1);
        if (k > 0) bag.add_pochhammer(2, 2, k);
        if (d2 - k > 0) bag.add_pochhammer(2, 2, d2 - k);
        if (2 * k < d2 - d1) {
            bag.add_pochhammer(d2 - d1 - 2 * k, 2, d1 + 1);
        } else {
            const int s = (2 * k - (d2 - d1) - 1) / 2;
            if (s <= d1) {
                // mixed signs in the odd family: s+1 flips
                if ((s + 1) % 2 == 1) negate = !negate;
                zpow += (s + 1) * (s + 1);
                bag.add_pochhammer(1, 2, s + 1);
                if (d1 - s > 0) bag.add_pochhammer(1, 2, d1 - s);
            } else {
                // every odd-family factor flips
                if ((d1 + 1) % 2 == 1) negate = !negate;
                zpow += (d1 + 1) * (2 * s - d1 + 1);
                bag.add_pochhammer(2 * (s - d1) + 1, 2, d1 + 1);
            }
        }
    }
    bag.numer = ZPoly::monomial(negate ? -1 : 1, zpow);
    return factored_expand(bag);
}

}  // namespace poincare
