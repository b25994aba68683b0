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

#include <optional>
#include <vector>

#include "poincare/counting.hpp"
#include "poincare/partial_fractions.hpp"
#include "poincare/presentation.hpp"
#include "poincare/ratfunc.hpp"

namespace poincare {

enum class SeriesKind { invariants, covariants };

const char* kind_name(SeriesKind kind);

struct PoincareResult {
    FormPair pair;
    SeriesKind kind;
    RatFunc value;
    std::optional<Presentation> presentation;
    std::optional<std::vector<mpz_class>> series;
};

/// Poincare series of the joint invariant or covariant algebra of the
/// pair, as a reduced rational function. Each partial-fraction term with
/// pole exponent e <= dmax contributes the diagonal extraction of
/// (1 - z^2) coeff (invariants) or (1 + z) coeff (covariants); terms with
/// e > dmax vanish under the extraction cutoff.
PoincareResult poincare_series(FormPair p, SeriesKind kind);

void attach_presentation(PoincareResult& result);
void attach_series(PoincareResult& result, int terms);

}  // namespace poincare
