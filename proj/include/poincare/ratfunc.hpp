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

#include <iosfwd>
#include <vector>

#include "poincare/zpoly.hpp"

namespace poincare {

/// Reduced ratio of two integer polynomials in a unique normal form:
/// no common polynomial factor, joint integer content 1, and the
/// denominator's lowest nonzero coefficient positive. Equality is
/// therefore structural.
class RatFunc {
public:
    RatFunc() : num_(), den_(ZPoly::one()) {}
    RatFunc(ZPoly num, ZPoly den);

    static RatFunc zero() { return {}; }
    static RatFunc one() { return RatFunc(ZPoly::one(), ZPoly::one()); }
    static RatFunc from_poly(ZPoly p);
    /// Trusted constructor for inputs already known to be fully reduced;
    /// only the content and sign conventions are applied.
    static RatFunc from_reduced(ZPoly num, ZPoly den);

    const ZPoly& num() const { return num_; }
    const ZPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);

    bool operator==(const RatFunc& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }

    friend std::ostream& operator<<(std::ostream& os, const RatFunc& r);

private:
    struct reduced_tag {};
    RatFunc(ZPoly num, ZPoly den, reduced_tag);
    void apply_sign_content();
    ZPoly num_, den_;
};

RatFunc rat_normalize(ZPoly num, ZPoly den);

enum class RatOp { add, sub, mul, div };
RatFunc rat_arith(const RatFunc& a, const RatFunc& b, RatOp op);

/// First n+1 Taylor coefficients of r at z = 0 by exact long division.
/// Throws when the denominator vanishes at 0 or a coefficient is not an
/// integer.
std::vector<mpz_class> series_prefix(const RatFunc& r, int n);

/// Prefix of the series of num / prod_k (1 - z^{k})^{mult_k}; the factor
/// list carries (k, mult) pairs. Cheap building block shared by series
/// routines.
std::vector<mpz_class> geometric_series_prefix(
    const ZPoly& num, const std::vector<std::pair<int, int>>& factors, int len);

}  // namespace poincare
