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

#include "poincare/presentation.hpp"

namespace poincare {

Presentation present(const RatFunc& r) {
    Presentation out;
    out.numerator = r.num();
    ZPoly work = r.den();
    for (int k = work.degree(); k >= 1; --k) {
        while (work.degree() >= k) {
            auto q = divide_exact(work, one_minus_zk(k));
            if (!q) break;
            work = std::move(*q);
            out.denominator_factors[k] += 1;
        }
        if (work.degree() < 1) break;
    }
    if (work.degree() >= 1 || work.constant_term() != 1) {
        if (work.degree() == 0 && work.constant_term() == -1) {
            out.numerator = -out.numerator;
            return out;
        }
        out.numerator = r.num();
        out.denominator_factors.clear();
        out.unfactored_denominator = r.den();
    }
    return out;
}

bool rat_equal(const RatFunc& a, const RatFunc& b) {
    return a.num() * b.den() == b.num() * a.den();
}

}  // namespace poincare
