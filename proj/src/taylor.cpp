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

#include "ztheta/taylor.hpp"

#include <stdexcept>

#include "ztheta/primes.hpp"

namespace ztheta {

namespace {

uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

}  // namespace

uint64_t per_case_seed(uint64_t base_seed, unsigned n, uint64_t p) {
    return splitmix64(splitmix64(base_seed ^ n) ^ p);
}

IntPoly taylor_monic(unsigned n, unsigned max_degree) {
    if (n < 1) throw std::invalid_argument("taylor_monic: n must be >= 1");
    if (n > max_degree) throw std::invalid_argument("taylor_monic: n exceeds the degree guard");
    std::vector<Integer> c(static_cast<size_t>(n) + 1);
    c[n] = 1;
    for (unsigned k = n; k >= 1; --k) {
        c[k - 1] = c[k] * static_cast<unsigned long>(k);
    }
    return IntPoly(std::move(c));
}

uint64_t legendre_vp(uint64_t n, uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("legendre_vp: p must be prime");
    uint64_t vp = 0;
    uint64_t q = p;
    while (q <= n) {
        vp += n / q;
        if (q > n / p) break;
        q *= p;
    }
    return vp;
}

bool theorem_predicate(uint64_t n, uint64_t p) {
    if (n < 1) throw std::invalid_argument("theorem_predicate: n must be >= 1");
    return legendre_vp(n, p) >= 2;
}

unsigned smallest_i(unsigned n, uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("smallest_i: p must be prime");
    if (p > n) throw std::invalid_argument("smallest_i: requires p <= n");
    const unsigned i = static_cast<unsigned>(n % p);
    if (!(i <= n - 2) || (n - i) % p != 0 || (i != 0 && i % p == 0)) {
        throw std::logic_error("smallest_i: postcondition violated");
    }
    return i;
}

ModPShape mod_p_shape(unsigned n, uint64_t p) {
    const unsigned i = smallest_i(n, p);
    const FpPoly f_bar = reduce_mod_p(taylor_monic(n), p);
    if (f_bar.degree() != static_cast<int>(n)) {
        throw std::logic_error("mod_p_shape: monic reduction lost its degree");
    }
    const unsigned shift = n - i;
    std::vector<uint64_t> tail_coeffs(static_cast<size_t>(i) + 1);
    for (unsigned k = 0; k < shift; ++k) {
        if (f_bar.coeff(k) != 0) {
            throw std::logic_error("mod_p_shape: coefficient below x^(n-i) survives mod p");
        }
    }
    for (unsigned j = 0; j <= i; ++j) {
        tail_coeffs[j] = f_bar.coeff(static_cast<size_t>(shift) + j);
    }
    ModPShape shape{i, FpPoly(p, std::move(tail_coeffs))};
    if (shape.tail.degree() != static_cast<int>(i) || !shape.tail.is_monic()) {
        throw std::logic_error("mod_p_shape: tail is not monic of degree i");
    }
    if (shape.tail.coeff(0) == 0) {
        throw std::logic_error("mod_p_shape: tail constant term vanishes");
    }
    if (!is_separable(shape.tail)) {
        throw std::logic_error("mod_p_shape: tail is not separable");
    }
    return shape;
}

IntPoly taylor_m(unsigned n, uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("taylor_m: p must be prime");
    if (p > n) throw std::invalid_argument("taylor_m: requires p <= n");
    const unsigned i = smallest_i(n, p);
    const IntPoly f = taylor_monic(n);
    const Integer prime(static_cast<unsigned long>(p));
    std::vector<Integer> out(static_cast<size_t>(n - i));
    for (unsigned k = 0; k < n - i; ++k) {
        if (!try_divexact(f.coeffs()[k], prime, out[k])) {
            throw std::logic_error("taylor_m: coefficient n!/k! not divisible by p");
        }
    }
    return IntPoly(std::move(out));
}

bool corollary_check(unsigned n, uint64_t seed) {
    if (n < 4) throw std::invalid_argument("corollary_check: requires n >= 4");
    return dedekind_test(taylor_monic(n), 2, seed).index_divisible_by_p;
}

TaylorCase verify_case(unsigned n, uint64_t p, uint64_t base_seed) {
    if (n < 1) throw std::invalid_argument("verify_case: n must be >= 1");
    if (!is_prime(p)) throw std::invalid_argument("verify_case: p must be prime");
    TaylorCase c;
    c.n = n;
    c.p = p;
    c.vp_factorial = legendre_vp(n, p);
    c.predicted_divisible = c.vp_factorial >= 2;
    const DedekindReport report = dedekind_test(taylor_monic(n), p, per_case_seed(base_seed, n, p));
    c.dedekind_divisible = report.index_divisible_by_p;
    c.agree = c.predicted_divisible == c.dedekind_divisible;
    return c;
}

bool disc_identity_check(unsigned n) {
    const IntPoly f = taylor_monic(n);
    const Integer d = discriminant(f);
    Integer predicted = pow_integer(factorial(n), n);
    if ((static_cast<unsigned long>(n) * (n - 1) / 2) % 2 == 1) predicted = -predicted;
    return d == predicted;
}

}  // namespace ztheta
