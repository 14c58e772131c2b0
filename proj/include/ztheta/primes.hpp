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

#ifndef ZTHETA_PRIMES_HPP
#define ZTHETA_PRIMES_HPP

#include <cstdint>
#include <vector>

namespace ztheta {

// Modular arithmetic on uint64_t. All moduli must be < 2^63 so that a + b
// cannot wrap before the reduction; products go through 128-bit intermediates.

inline uint64_t add_mod(uint64_t a, uint64_t b, uint64_t m) {
    uint64_t s = a + b;
    return s >= m ? s - m : s;
}

inline uint64_t sub_mod(uint64_t a, uint64_t b, uint64_t m) {
    return a >= b ? a - b : a + (m - b);
}

inline uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

uint64_t pow_mod(uint64_t a, uint64_t e, uint64_t m);

// Inverse of a modulo a prime p; a must be nonzero mod p.
uint64_t inv_mod(uint64_t a, uint64_t p);

// Deterministic Miller-Rabin: exact for every 64-bit input.
bool is_prime(uint64_t n);

// All primes <= bound, ascending.
std::vector<uint64_t> primes_up_to(uint64_t bound);

}  // namespace ztheta

#endif  // ZTHETA_PRIMES_HPP
