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

#include "poincare/ratfunc.hpp"
#include "poincare/zpoly.hpp"

namespace poincare {

/// A rational series written as numerator over a product of (1 - z^k)
/// factors. Non-unique; expands back to the source value exactly. When the
/// reduced denominator resists greedy factor extraction it is carried
/// verbatim instead.
struct Presentation {
    ZPoly numerator;
    std::map<int, int> denominator_factors;
    std::optional<ZPoly> unfactored_denominator;

    bool factored() const { return !unfactored_denominator.has_value(); }
};

/// Greedy deterministic presentation of a reduced rational series:
/// extracts (1 - z^k) divisors largest k first; a non-unit remainder
/// falls back to the unfactored form.
Presentation present(const RatFunc& r);

/// Value equality by cross-multiplication.
bool rat_equal(const RatFunc& a, const RatFunc& b);

}  // namespace poincare
