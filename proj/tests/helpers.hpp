// Copyright 2026 The ztheta Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Shared test utilities. The oracles here are deliberately independent of the
// library internals: the resultant oracle expands the Sylvester determinant
// with Bareiss elimination, the gcd oracle runs its own pseudo-remainder
// sequence, and the irreducibility oracle is plain trial division.

#ifndef ZTHETA_TESTS_HELPERS_HPP
#define ZTHETA_TESTS_HELPERS_HPP

#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ztheta/fp_poly.hpp"
#include "ztheta/int_poly.hpp"

namespace testutil {

using ztheta::FpPoly;
using ztheta::Integer;
using ztheta::IntPoly;

// Small signed coefficient in [-bound, bound].
inline Integer random_coeff(std::mt19937_64& rng, long bound) {
    const uint64_t span = 2 * static_cast<uint64_t>(bound) + 1;
    return Integer(static_cast<long>(rng() % span) - bound);
}

// Random polynomial of exactly the requested degree; deg < 0 gives zero.
inline IntPoly random_int_poly(std::mt19937_64& rng, int deg, long bound) {
    if (deg < 0) return IntPoly();
    std::vector<Integer> c(static_cast<size_t>(deg) + 1);
    for (auto& v : c) v = random_coeff(rng, bound);
    while (c.back() == 0) c.back() = random_coeff(rng, bound);
    return IntPoly(std::move(c));
}

inline IntPoly random_monic_int_poly(std::mt19937_64& rng, int deg, long bound) {
    std::vector<Integer> c(static_cast<size_t>(deg) + 1);
    for (int k = 0; k < deg; ++k) c[k] = random_coeff(rng, bound);
    c[deg] = 1;
    return IntPoly(std::move(c));
}

inline FpPoly random_fp_poly(std::mt19937_64& rng, uint64_t p, int deg) {
    if (deg < 0) return FpPoly(p);
    std::vector<uint64_t> c(static_cast<size_t>(deg) + 1);
    for (auto& v : c) v = rng() % p;
    while (c.back() == 0) c.back() = rng() % p;
    return FpPoly(p, std::move(c));
}

inline FpPoly random_monic_fp_poly(std::mt19937_64& rng, uint64_t p, int deg) {
    std::vector<uint64_t> c(static_cast<size_t>(deg) + 1);
    for (int k = 0; k < deg; ++k) c[k] = rng() % p;
    c[deg] = 1;
    return FpPoly(p, std::move(c));
}

// Resultant by Sylvester determinant, evaluated with Bareiss fraction-free
// elimination. Exact, independent of the library's PRS and modular routes.
inline Integer sylvester_resultant(const IntPoly& a, const IntPoly& b) {
    const int m = a.degree();
    const int n = b.degree();
    if (m < 0 || n < 0) throw std::invalid_argument("zero polynomial");
    const int k = m + n;
    if (k == 0) return Integer(1);
    std::vector<std::vector<Integer>> s(k, std::vector<Integer>(k, Integer(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= m; ++j) s[i][i + j] = a.coeff(m - j);
    }
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j <= n; ++j) s[n + i][i + j] = b.coeff(n - j);
    }
    int sign = 1;
    Integer prev(1);
    for (int i = 0; i + 1 < k; ++i) {
        if (s[i][i] == 0) {
            int pivot = -1;
            for (int r = i + 1; r < k; ++r) {
                if (s[r][i] != 0) { pivot = r; break; }
            }
            if (pivot < 0) return Integer(0);
            std::swap(s[i], s[pivot]);
            sign = -sign;
        }
        for (int r = i + 1; r < k; ++r) {
            for (int col = i + 1; col < k; ++col) {
                Integer t = s[i][i] * s[r][col] - s[r][i] * s[i][col];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                s[r][col] = std::move(t);
            }
            s[r][i] = 0;
        }
        prev = s[i][i];
    }
    Integer det = s[k - 1][k - 1];
    return sign == 1 ? det : -det;
}

// Content-free part with positive leading coefficient; zero maps to zero.
inline IntPoly primitive_part(const IntPoly& a) {
    if (a.is_zero()) return a;
    Integer g(0);
    for (const auto& c : a.coeffs()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    }
    if (a.leading() < 0) g = -g;
    std::vector<Integer> out;
    out.reserve(a.coeffs().size());
    for (const auto& c : a.coeffs()) {
        Integer q;
        mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        out.push_back(std::move(q));
    }
    return IntPoly(std::move(out));
}

// Pseudo-remainder of a by b, correct up to a nonzero integer factor, which
// is all the gcd oracle below needs.
inline IntPoly pseudo_rem_local(const IntPoly& a, const IntPoly& b) {
    std::vector<Integer> r = a.coeffs();
    const auto& bc = b.coeffs();
    const int db = b.degree();
    const Integer d = b.leading();
    for (int k = a.degree(); k >= db; --k) {
        const Integer lead = r[static_cast<size_t>(k)];
        if (lead == 0) continue;
        for (auto& v : r) v *= d;
        for (int j = 0; j <= db; ++j) {
            r[static_cast<size_t>(k - db + j)] -= lead * bc[static_cast<size_t>(j)];
        }
    }
    r.resize(static_cast<size_t>(db));
    return IntPoly(std::move(r));
}

// Primitive gcd over Z, normalized to a positive leading coefficient.
inline IntPoly gcd_z_oracle(IntPoly a, IntPoly b) {
    a = primitive_part(a);
    b = primitive_part(b);
    while (!b.is_zero()) {
        if (a.degree() < b.degree()) std::swap(a, b);
        if (b.degree() == 0) return IntPoly::one();
        IntPoly r = pseudo_rem_local(a, b);
        a = std::move(b);
        b = primitive_part(r);
    }
    return a;
}

// Every monic polynomial of degree d over F_p, p^d of them.
inline std::vector<FpPoly> all_monic_polys(uint64_t p, unsigned d) {
    uint64_t total = 1;
    for (unsigned k = 0; k < d; ++k) total *= p;
    std::vector<FpPoly> out;
    out.reserve(total);
    for (uint64_t idx = 0; idx < total; ++idx) {
        std::vector<uint64_t> c(d + 1, 0);
        uint64_t t = idx;
        for (unsigned k = 0; k < d; ++k) {
            c[k] = t % p;
            t /= p;
        }
        c[d] = 1;
        out.emplace_back(p, std::move(c));
    }
    return out;
}

// Trial division by every monic polynomial of degree at most deg/2.
inline bool brute_force_irreducible(const FpPoly& f) {
    const int d = f.degree();
    if (d < 1) return false;
    for (int e = 1; 2 * e <= d; ++e) {
        for (const auto& g : all_monic_polys(f.modulus(), static_cast<unsigned>(e))) {
            if (ztheta::fp_divides(g, f)) return false;
        }
    }
    return true;
}

}  // namespace testutil

#endif  // ZTHETA_TESTS_HELPERS_HPP
