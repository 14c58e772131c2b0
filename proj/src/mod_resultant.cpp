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

#include "ztheta/mod_resultant.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

#include "ztheta/primes.hpp"

namespace ztheta {

namespace {

// Shared descending pool of 62-bit primes, grown on demand. Callers receive a
// copy so concurrent growth can never invalidate anything they hold.
std::vector<uint64_t> modulus_pool(size_t count) {
    static std::mutex mu;
    static std::vector<uint64_t> pool;
    static uint64_t candidate = (1ull << 62) - 1;
    std::lock_guard<std::mutex> lock(mu);
    while (pool.size() < count) {
        while (!is_prime(candidate)) candidate -= 2;
        pool.push_back(candidate);
        candidate -= 2;
    }
    return {pool.begin(), pool.begin() + static_cast<long>(count)};
}

int degree_of(const std::vector<uint64_t>& v) {
    int d = static_cast<int>(v.size()) - 1;
    while (d >= 0 && v[static_cast<size_t>(d)] == 0) --d;
    return d;
}

// Resultant of the reductions of a and b modulo p via the Euclidean
// recurrence Res(A, B) = (-1)^(deg A * deg B) lc(B)^(deg A - deg R) Res(B, R)
// with R = A mod B. Requires p to divide neither leading coefficient, so the
// degrees survive reduction and the value equals Res(a, b) mod p.
uint64_t resultant_mod_p(const std::vector<Integer>& ac, const std::vector<Integer>& bc, uint64_t p) {
    auto reduce = [p](const std::vector<Integer>& c) {
        std::vector<uint64_t> r(c.size());
        for (size_t i = 0; i < c.size(); ++i) r[i] = mpz_fdiv_ui(c[i].get_mpz_t(), p);
        return r;
    };
    std::vector<uint64_t> a = reduce(ac);
    std::vector<uint64_t> b = reduce(bc);
    int da = degree_of(a);
    int db = degree_of(b);
    uint64_t res = 1;
    bool negate = false;
    while (true) {
        if (db == 0) {
            res = mul_mod(res, pow_mod(b[0], static_cast<uint64_t>(da), p), p);
            break;
        }
        const uint64_t inv = inv_mod(b[static_cast<size_t>(db)], p);
        std::vector<uint64_t> r = a;
        for (int k = da; k >= db; --k) {
            const uint64_t t = mul_mod(r[static_cast<size_t>(k)], inv, p);
            if (t == 0) continue;
            for (int j = 0; j <= db; ++j) {
                auto& cell = r[static_cast<size_t>(k - db + j)];
                cell = sub_mod(cell, mul_mod(t, b[static_cast<size_t>(j)], p), p);
            }
        }
        const int dr = degree_of(r);
        if (dr < 0) return 0;
        res = mul_mod(res, pow_mod(b[static_cast<size_t>(db)], static_cast<uint64_t>(da - dr), p), p);
        if ((da & 1) && (db & 1)) negate = !negate;
        a.swap(b);
        da = db;
        b = std::move(r);
        db = dr;
    }
    if (negate && res != 0) res = p - res;
    return res;
}

size_t bit_length(const Integer& v) { return mpz_sizeinbase(v.get_mpz_t(), 2); }

}  // namespace

Integer resultant_modular(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) {
        throw std::invalid_argument("resultant_modular: zero polynomial input");
    }
    const int da = a.degree();
    const int db = b.degree();
    if (da == 0 && db == 0) return Integer(1);
    if (da == 0) return pow_integer(a.leading(), static_cast<unsigned long>(db));
    if (db == 0) return pow_integer(b.leading(), static_cast<unsigned long>(da));

    // Hadamard bound on the Sylvester determinant:
    // |Res|^2 <= (sum a_i^2)^deg(b) * (sum b_i^2)^deg(a).
    Integer sa = 0;
    Integer sb = 0;
    for (const auto& c : a.coeffs()) sa += c * c;
    for (const auto& c : b.coeffs()) sb += c * c;
    const Integer target = 4 * pow_integer(sa, static_cast<unsigned long>(db)) *
                           pow_integer(sb, static_cast<unsigned long>(da));
    const Integer lc_product = a.leading() * b.leading();

    std::vector<uint64_t> chosen;
    Integer modulus_product = 1;
    size_t idx = 0;
    std::vector<uint64_t> pool = modulus_pool(bit_length(target) / 2 / 61 + 2);
    // 2*bits(M) >= bits(target) + 2 implies M^2 >= 2^bits(target) > target.
    while (2 * bit_length(modulus_product) < bit_length(target) + 2) {
        if (idx >= pool.size()) pool = modulus_pool(pool.size() + 16);
        const uint64_t p = pool[idx++];
        if (mpz_divisible_ui_p(lc_product.get_mpz_t(), p)) continue;
        chosen.push_back(p);
        modulus_product *= p;
    }

    std::vector<uint64_t> residues(chosen.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long i = 0; i < static_cast<long>(chosen.size()); ++i) {
        residues[static_cast<size_t>(i)] =
            resultant_mod_p(a.coeffs(), b.coeffs(), chosen[static_cast<size_t>(i)]);
    }

    // Incremental Garner CRT; x stays in [0, partial) throughout.
    Integer x = 0;
    Integer partial = 1;
    for (size_t i = 0; i < chosen.size(); ++i) {
        const uint64_t p = chosen[i];
        const uint64_t xi = mpz_fdiv_ui(x.get_mpz_t(), p);
        const uint64_t pi = mpz_fdiv_ui(partial.get_mpz_t(), p);
        const uint64_t t = mul_mod(sub_mod(residues[i], xi, p), inv_mod(pi, p), p);
        mpz_addmul_ui(x.get_mpz_t(), partial.get_mpz_t(), t);
        mpz_mul_ui(partial.get_mpz_t(), partial.get_mpz_t(), p);
    }
    if (2 * x > partial) x -= partial;
    return x;
}

Integer discriminant_modular(const IntPoly& a) {
    if (a.degree() < 1) throw std::invalid_argument("discriminant_modular: degree >= 1 required");
    Integer res = resultant_modular(a, derivative(a));
    Integer q;
    if (!try_divexact(res, a.leading(), q)) {
        throw std::logic_error("discriminant_modular: resultant not divisible by leading coefficient");
    }
    const auto n = static_cast<unsigned long>(a.degree());
    if ((n * (n - 1) / 2) % 2 == 1) q = -q;
    return q;
}

}  // namespace ztheta
