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

#include <gmpxx.h>

#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

namespace poincare {

/// Dense univariate polynomial in z with arbitrary-precision integer
/// coefficients. coeffs()[i] is the coefficient of z^i; trailing zeros are
/// trimmed, so the zero polynomial is the empty vector.
class ZPoly {
public:
    ZPoly() = default;
    explicit ZPoly(std::vector<mpz_class> coeffs);
    ZPoly(std::initializer_list<long> coeffs);

    static ZPoly zero() { return {}; }
    static ZPoly one() { return constant(1); }
    static ZPoly constant(mpz_class c);
    static ZPoly monomial(mpz_class c, int exp);
    /// Builds from (exponent, coefficient) pairs; repeated exponents add up.
    static ZPoly from_terms(const std::vector<std::pair<int, mpz_class>>& terms);

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const mpz_class& coeff(int i) const;
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }
    const mpz_class& leading() const { return coeffs_.back(); }
    const mpz_class& constant_term() const { return coeff(0); }

    ZPoly operator-() const;
    ZPoly& operator+=(const ZPoly& o);
    ZPoly& operator-=(const ZPoly& o);
    friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
    friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }
    friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
    ZPoly& operator*=(const ZPoly& o);

    ZPoly scaled(const mpz_class& c) const;
    /// Multiplication by z^exp.
    ZPoly shifted(int exp) const;
    /// Exact division by z^exp; throws if a lower-order coefficient is nonzero.
    ZPoly unshifted(int exp) const;
    /// p * (1 + z^k + z^{2k} + ... + z^{(len-1)k}), len >= 1.
    ZPoly times_ones(int k, int len) const;

    mpz_class eval(const mpz_class& x) const;

    bool operator==(const ZPoly& o) const { return coeffs_ == o.coeffs_; }

    friend std::ostream& operator<<(std::ostream& os, const ZPoly& p);

private:
    void trim();
    std::vector<mpz_class> coeffs_;
};

ZPoly poly_mul(const ZPoly& p, const ZPoly& q);
ZPoly poly_derivative(const ZPoly& p);

/// 1 - z^k, k >= 1.
ZPoly one_minus_zk(int k);

/// Exact quotient a / b over the integers, or nullopt when b does not
/// divide a.
std::optional<ZPoly> divide_exact(const ZPoly& a, const ZPoly& b);

/// gcd of all coefficients, nonnegative; 0 for the zero polynomial.
mpz_class poly_content(const ZPoly& p);
ZPoly primitive_part(const ZPoly& p);

/// Polynomial gcd over the integers via content splitting and a
/// subresultant remainder sequence. The result is primitive with positive
/// leading coefficient, scaled by gcd(content(a), content(b)).
ZPoly poly_gcd(const ZPoly& a, const ZPoly& b);

/// nth cyclotomic polynomial, n >= 1. Cached; safe for concurrent use.
ZPoly cyclotomic(int n);

}  // namespace poincare
