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

#include <vector>

#include "poincare/zpoly.hpp"

namespace poincare {

/// Degrees of the two binary forms, both >= 1.
class FormPair {
public:
    FormPair(int d1, int d2);
    int d1() const { return d1_; }
    int d2() const { return d2_; }
    int dmin() const { return d1_ < d2_ ? d1_ : d2_; }
    int dmax() const { return d1_ < d2_ ? d2_ : d1_; }
    bool operator==(const FormPair& o) const = default;

private:
    int d1_, d2_;
};

/// The multiset of z-exponents appearing in the shifted generating
/// function's denominator: {dmin+dmax-2i : 0 <= i <= dmin} together with
/// {2j : 0 <= j <= dmax}, as sorted (exponent, multiplicity) pairs.
std::vector<std::pair<int, int>> shifted_exponents(FormPair p);

struct WeightCount {
    int n;             // total degree
    int i;             // weight
    mpz_class value;   // number of monomials
};

/// Counts of degree-n monomials by weight, for all n <= max_degree, built
/// by dynamic programming over the coefficient variables (one unbounded
/// counter per variable). Immutable once constructed.
class OmegaTable {
public:
    OmegaTable(FormPair p, int max_degree);

    const FormPair& pair() const { return pair_; }
    int max_degree() const { return max_n_; }

    /// Number of degree-n monomials of weight i; 0 outside the support.
    const mpz_class& omega(int n, int i) const;
    /// Multiplicity of the weight-k irreducible summand: omega(k) - omega(k+2).
    mpz_class gamma(int n, int k) const;
    mpz_class dim_invariants(int n) const;
    mpz_class dim_covariants(int n) const;

private:
    FormPair pair_;
    int max_n_;
    int shift_;                                   // per unit of degree
    std::vector<std::vector<mpz_class>> counts_;  // [n][n*shift_ + i]
};

// Single-shot conveniences; bulk callers should hold an OmegaTable.
mpz_class omega_count(FormPair p, int n, int i);
mpz_class gamma_multiplicity(FormPair p, int n, int k);
mpz_class dim_invariants(FormPair p, int n);
mpz_class dim_covariants(FormPair p, int n);

/// Independent route to the same counts: the shifted two-variable
/// generating series expanded to t-order max_degree, with polynomial
/// t-coefficients. The weight-i count at degree n sits at z-exponent
/// n*dmax + i of the t^n coefficient.
class TruncatedOmega {
public:
    TruncatedOmega(FormPair p, int max_degree);

    const FormPair& pair() const { return pair_; }
    int max_degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const ZPoly& t_coefficient(int n) const;
    mpz_class omega(int n, int i) const;
    /// All nonzero weight counts at degree n.
    std::vector<WeightCount> row(int n) const;

private:
    FormPair pair_;
    std::vector<ZPoly> coeffs_;
};

TruncatedOmega truncated_omega(FormPair p, int max_degree);

}  // namespace poincare
