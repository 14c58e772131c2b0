/*
   Copyright 2026 The ztheta Authors

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

#ifndef ZTHETA_DEDEKIND_HPP
#define ZTHETA_DEDEKIND_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "ztheta/fp_factor.hpp"
#include "ztheta/fp_poly.hpp"
#include "ztheta/int_poly.hpp"

namespace ztheta {

// Index-divisibility test for a monic f in Z[x] at a prime p, by the Dedekind
// criterion: factor f mod p as prod g_i^(e_i), lift the g_i to monic integer
// polynomials, set M = (f - prod lifts^(e_i)) / p, and then p divides the
// index [Z_K : Z[theta]] exactly when some repeated factor (e_i >= 2) divides
// M mod p. When f is the minimal polynomial of theta and K = Q(theta), this
// is the classical criterion; the library itself never checks irreducibility
// of f over Q, which stays the caller's obligation for that interpretation.

// Canonical monic lift: coefficients taken as their residues in [0, p).
// Rejects non-monic input.
IntPoly lift_monic(const FpPoly& g);

// M = (f - lifted_product) / p. f must be monic; the division must be exact,
// otherwise the lifted product was not congruent to f mod p and an
// invalid_argument is raised.
IntPoly dedekind_m(const IntPoly& f, uint64_t p, const IntPoly& lifted_product);

// Evidence for one factor of f mod p. divides_m is only meaningful when
// needs_check (exponent >= 2) holds; it is false otherwise.
struct FactorVerdict {
    FpPoly factor;
    unsigned exponent = 0;
    bool needs_check = false;
    bool divides_m = false;
};

struct DedekindReport {
    uint64_t p = 0;
    IntPoly f;
    FpFactorization factorization;
    IntPoly lifted_product;
    IntPoly m_poly;
    std::vector<FactorVerdict> per_factor;
    bool index_divisible_by_p = false;
};

// Criterion evaluated for caller-chosen monic lifts of the distinct factors
// of f mod p (lift reduced mod p recovers the factor). The verdict is
// independent of the lift choice; exposing this entry point is what lets the
// test suite perturb lifts by p-multiples and watch the verdict hold still.
struct LiftedCriterion {
    IntPoly lifted_product;
    IntPoly m_poly;
    std::vector<bool> divides_m;
    bool index_divisible_by_p = false;
};

LiftedCriterion dedekind_with_lifts(const IntPoly& f, uint64_t p,
                                    const std::vector<std::pair<IntPoly, unsigned>>& lifted_factors);

// Full criterion with canonical lifts and complete evidence. Every factor is
// evaluated (no short-circuit on the first repeated divisor); a separable
// f mod p yields index_divisible_by_p = false with no factor consulted
// against M. Rejects non-monic f, degree < 1, and composite p.
DedekindReport dedekind_test(const IntPoly& f, uint64_t p, uint64_t seed = kDefaultFactorSeed);

}  // namespace ztheta

#endif  // ZTHETA_DEDEKIND_HPP
