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

#ifndef ZTHETA_FP_FACTOR_HPP
#define ZTHETA_FP_FACTOR_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "ztheta/fp_poly.hpp"

namespace ztheta {

// Default seed for the randomized equal-degree splitting stage. Any fixed
// seed gives fully reproducible runs; the factor multiset is canonical and
// does not depend on the seed at all.
inline constexpr uint64_t kDefaultFactorSeed = 42;

// Complete factorization a = unit * prod factors[i].first ^ factors[i].second
// with monic irreducible factors, pairwise distinct, sorted by degree and
// then lexicographically on the ascending coefficient vector.
struct FpFactorization {
    uint64_t p = 0;
    uint64_t unit = 1;
    std::vector<std::pair<FpPoly, unsigned>> factors;

    FpPoly product() const;
};

// Factors a nonzero polynomial over F_p, p prime. Equal-degree splitting is
// randomized (Cantor-Zassenhaus) and driven by the seed; the result is the
// same canonical factorization for every seed.
FpFactorization factor(const FpPoly& a, uint64_t seed = kDefaultFactorSeed);

// Rabin's certificate: g of degree d >= 1 is irreducible iff x^(p^d) == x
// (mod g) and gcd(x^(p^(d/q)) - x, g) = 1 for every prime q dividing d.
bool is_irreducible(const FpPoly& g);

}  // namespace ztheta

#endif  // ZTHETA_FP_FACTOR_HPP
