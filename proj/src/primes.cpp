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

#include "ztheta/primes.hpp"

#include <stdexcept>

namespace ztheta {

uint64_t pow_mod(uint64_t a, uint64_t e, uint64_t m) {
    if (m == 0) throw std::invalid_argument("pow_mod: zero modulus");
    uint64_t r = m == 1 ? 0 : 1;
    a %= m;
    while (e != 0) {
        if (e & 1) r = mul_mod(r, a, m);
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    return r;
}

uint64_t inv_mod(uint64_t a, uint64_t p) {
    a %= p;
    if (a == 0) throw std::invalid_argument("inv_mod: zero has no inverse");
    return pow_mod(a, p - 2, p);
}

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    // Trial division by the witness set; afterwards every witness is coprime to n.
    for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // This base set decides primality for all n < 3.3 * 10^24, so for all uint64_t.
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<uint64_t> primes_up_to(uint64_t bound) {
    std::vector<uint64_t> out;
    if (bound < 2) return out;
    std::vector<uint8_t> sieve(bound + 1, 1);
    sieve[0] = sieve[1] = 0;
    for (uint64_t i = 2; i * i <= bound; ++i) {
        if (!sieve[i]) continue;
        for (uint64_t j = i * i; j <= bound; j += i) sieve[j] = 0;
    }
    for (uint64_t i = 2; i <= bound; ++i) {
        if (sieve[i]) out.push_back(i);
    }
    return out;
}

}  // namespace ztheta
