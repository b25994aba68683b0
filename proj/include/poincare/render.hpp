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

#include <string>
#include <string_view>

#include "poincare/poincare_series.hpp"

namespace poincare {

enum class RenderFormat { text, latex, json };

/// Deterministic rendering of a result. text and latex show the factored
/// presentation (attached on the fly when absent); json emits the full
/// schema object with numerator coefficients, denominator factors and the
/// optional series prefix. Integers beyond 64 bits become decimal strings.
std::string render(const PoincareResult& result, RenderFormat format);

RenderFormat render_format_from_name(std::string_view name);

/// Inverse of the json rendering; validates the structure and rebuilds the
/// value (reduced) and presentation. The series array is kept as stored so
/// that verification can cross-check it against the value.
PoincareResult parse_result_json(std::string_view json_text);

}  // namespace poincare
