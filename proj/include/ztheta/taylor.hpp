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

#ifndef ZTHETA_TAYLOR_HPP
#define ZTHETA_TAYLOR_HPP

#include <cstdint>

#include "ztheta/dedekind.hpp"
#include "ztheta/fp_poly.hpp"
#include "ztheta/int_poly.hpp"

namespace ztheta {

// The monic integer form of the degree-n Taylor polynomial of exp:
//   f_n(x) = sum_{k=0}^{n} (n!/k!) x^k = x^n + n x^(n-1) + ... + n! x + n!.
// For this family the index [Z_K : Z[theta]] is divisible by p exactly when
// p^2 divides n!, equivalently n >= 2p; this module carries both sides of
// that equivalence plus the machinery that makes the criterion mechanical.

inline constexpr uint64_t kDefaultScanSeed = 0;

// Deterministic per-case seed for the factorization stage.
uint64_t per_case_seed(uint64_t base_seed, unsigned n, uint64_t p);

// f_n as above; requires 1 <= n <= max_degree.
IntPoly taylor_monic(unsigned n, unsigned max_degree = kDefaultMaxDegree);

// v_p(n!) by Legendre's formula sum_k floor(n / p^k).
uint64_t legendre_vp(uint64_t n, uint64_t p);

// Predicted index divisibility: v_p(n!) >= 2 (equivalently n >= 2p).
bool theorem_predicate(uint64_t n, uint64_t p);

// Smallest i >= 0 with p | (n - i); requires p <= n. Always satisfies
// i = n mod p <= n - 2, and p cannot divide a nonzero i.
unsigned smallest_i(unsigned n, uint64_t p);

// Shape of f_n mod p for p <= n: f_n == x^(n-i) * tail with tail monic of
// degree i, tail(0) != 0 and tail separable. All three facts are checked on
// construction; a violation raises logic_error.
struct ModPShape {
    unsigned i = 0;
    FpPoly tail;
};
ModPShape mod_p_shape(unsigned n, uint64_t p);

// Closed-form M polynomial for this family with the natural lift
// x^(n-i) * (x^i + n x^(i-1) + ... + n!/(n-i)!) taken with the original
// integer coefficients of f_n:
//   M = (1/p) sum_{k=0}^{n-i-1} (n!/k!) x^k,  constant term n!/p.
// Requires p <= n; every division by p is checked exact.
IntPoly taylor_m(unsigned n, uint64_t p);

// Criterion outcome for 2 at f_n, n >= 4 (always true: 4 <= 2*2 <= n).
bool corollary_check(unsigned n, uint64_t seed = kDefaultFactorSeed);

// One (n, p) case: the valuation-side prediction against the generic
// Dedekind criterion run on f_n. agree records whether the routes coincide.
struct TaylorCase {
    unsigned n = 0;
    uint64_t p = 0;
    uint64_t vp_factorial = 0;
    bool predicted_divisible = false;
    bool dedekind_divisible = false;
    bool agree = false;

    bool operator==(const TaylorCase&) const = default;
};

TaylorCase verify_case(unsigned n, uint64_t p, uint64_t base_seed = kDefaultScanSeed);

// Exact check of disc(f_n) == (-1)^(n(n-1)/2) * (n!)^n.
bool disc_identity_check(unsigned n);

}  // namespace ztheta

#endif  // ZTHETA_TAYLOR_HPP
