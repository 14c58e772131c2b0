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

#ifndef ZTHETA_MOD_RESULTANT_HPP
#define ZTHETA_MOD_RESULTANT_HPP

#include "ztheta/int_poly.hpp"

namespace ztheta {

// Second, independent route to the same values as resultant()/discriminant():
// reduce modulo enough word-size primes to cover a Hadamard bound, compute
// each residue with a Euclidean remainder sequence over F_p, and reconstruct
// the exact integer by CRT with a symmetric representative. The per-prime
// loop runs under OpenMP when available; results are exact and identical to
// the serial subresultant route either way.
Integer resultant_modular(const IntPoly& a, const IntPoly& b);
Integer discriminant_modular(const IntPoly& a);

}  // namespace ztheta

#endif  // ZTHETA_MOD_RESULTANT_HPP
