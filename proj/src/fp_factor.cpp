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

#include "ztheta/fp_factor.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "ztheta/primes.hpp"

namespace ztheta {

namespace {

// Division known to be exact; the nonzero-remainder branch would mean a bug
// in the decomposition logic.
FpPoly divide_exact(const FpPoly& a, const FpPoly& b) {
    auto [q, r] = fp_divrem(a, b);
    if (!r.is_zero()) throw std::logic_error("fp_factor: inexact internal division");
    return q;
}

// p-th root of f when f(x) = v(x^p); in F_p the coefficients carry over
// unchanged because the Frobenius map fixes F_p pointwise.
FpPoly pth_root(const FpPoly& f) {
    const uint64_t p = f.modulus();
    std::vector<uint64_t> out;
    out.reserve(f.coeffs().size() / p + 1);
    for (size_t k = 0; k < f.coeffs().size(); ++k) {
        if (k % p == 0) {
            out.push_back(f.coeffs()[k]);
        } else if (f.coeffs()[k] != 0) {
            throw std::logic_error("fp_factor: pth_root on a polynomial that is not a p-th power");
        }
    }
    return FpPoly(p, std::move(out));
}

// Squarefree decomposition of a monic f: pairwise-coprime monic parts with
// multiplicities, product of part^mult equal to f. Multiplicities divisible
// by p hide in gcd(f, f') with zero derivative contribution, so that branch
// recurses through the p-th root (this is what makes p = 2, 3 work).
void squarefree_decomposition(const FpPoly& f, unsigned scale,
                              std::vector<std::pair<FpPoly, unsigned>>& out) {
    const uint64_t p = f.modulus();
    if (f.degree() < 1) return;
    FpPoly fp = fp_derivative(f);
    if (fp.is_zero()) {
        squarefree_decomposition(pth_root(f), scale * static_cast<unsigned>(p), out);
        return;
    }
    FpPoly c = fp_gcd(f, fp);
    FpPoly w = divide_exact(f, c);
    unsigned i = 1;
    while (w.degree() > 0) {
        FpPoly y = fp_gcd(w, c);
        FpPoly z = divide_exact(w, y);
        if (z.degree() > 0) out.emplace_back(z, i * scale);
        w = std::move(y);
        c = divide_exact(c, w);
        ++i;
    }
    if (c.degree() > 0) {
        squarefree_decomposition(pth_root(c), scale * static_cast<unsigned>(p), out);
    }
}

// Distinct-degree split of a squarefree monic f: (product of all irreducible
// factors of degree d, d) pairs.
std::vector<std::pair<FpPoly, unsigned>> distinct_degree_split(const FpPoly& f) {
    std::vector<std::pair<FpPoly, unsigned>> out;
    const uint64_t p = f.modulus();
    FpPoly rem = f;
    FpPoly h = fp_mod(FpPoly::x(p), rem);
    unsigned d = 0;
    while (rem.degree() > 0) {
        ++d;
        if (2 * d > static_cast<unsigned>(rem.degree())) {
            out.emplace_back(rem, static_cast<unsigned>(rem.degree()));
            break;
        }
        h = fp_pow_mod(h, p, rem);  // h = x^(p^d) mod rem
        FpPoly g = fp_gcd(h - fp_mod(FpPoly::x(p), rem), rem);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            rem = divide_exact(rem, g);
            if (rem.degree() == 0) break;
            h = fp_mod(h, rem);
        }
    }
    return out;
}

// Cantor-Zassenhaus equal-degree splitting: f is a product of r >= 1 distinct
// monic irreducibles, all of degree d.
void equal_degree_split(const FpPoly& f, unsigned d, std::mt19937_64& rng,
                        std::vector<FpPoly>& out) {
    if (f.degree() == static_cast<int>(d)) {
        out.push_back(f);
        return;
    }
    const uint64_t p = f.modulus();
    // rng() % p instead of a distribution: identical streams on every stdlib.
    auto coeff = [&rng, p] { return rng() % p; };
    Integer half_order = 0;
    if (p != 2) {
        mpz_ui_pow_ui(half_order.get_mpz_t(), static_cast<unsigned long>(p), d);
        half_order = (half_order - 1) / 2;
    }
    for (int attempt = 0; attempt < 512; ++attempt) {
        const int du = 1 + static_cast<int>(rng() % static_cast<uint64_t>(f.degree() - 1));
        std::vector<uint64_t> uc(static_cast<size_t>(du) + 1);
        for (auto& c : uc) c = coeff();
        FpPoly u(p, std::move(uc));
        if (u.degree() < 1) continue;
        FpPoly g = fp_gcd(u, f);
        if (g.degree() == 0) {
            if (p == 2) {
                // Trace map into F_2: T(u) = u + u^2 + ... + u^(2^(d-1)).
                FpPoly acc = fp_mod(u, f);
                FpPoly t = acc;
                for (unsigned j = 1; j < d; ++j) {
                    acc = fp_mod(acc * acc, f);
                    t = t + acc;
                }
                g = fp_gcd(t, f);
            } else {
                FpPoly w = fp_pow_mod(u, half_order, f);
                g = fp_gcd(w - FpPoly::constant(p, 1), f);
            }
        }
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree_split(g, d, rng, out);
            equal_degree_split(divide_exact(f, g), d, rng, out);
            return;
        }
    }
    throw std::logic_error("fp_factor: equal-degree splitting failed to converge");
}

bool factor_order_less(const std::pair<FpPoly, unsigned>& a, const std::pair<FpPoly, unsigned>& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    return a.first.coeffs() < b.first.coeffs();
}

// x^(p^k) mod g by iterated Frobenius powers.
FpPoly frobenius_power(const FpPoly& g, unsigned k) {
    const uint64_t p = g.modulus();
    FpPoly h = fp_mod(FpPoly::x(p), g);
    for (unsigned t = 0; t < k; ++t) h = fp_pow_mod(h, p, g);
    return h;
}

}  // namespace

FpPoly FpFactorization::product() const {
    FpPoly acc = FpPoly::constant(p, unit);
    for (const auto& [g, e] : factors) {
        for (unsigned k = 0; k < e; ++k) acc = acc * g;
    }
    return acc;
}

FpFactorization factor(const FpPoly& a, uint64_t seed) {
    if (a.is_zero()) throw std::invalid_argument("factor: zero polynomial");
    if (!is_prime(a.modulus())) throw std::invalid_argument("factor: modulus must be prime");
    FpFactorization out;
    out.p = a.modulus();
    out.unit = a.leading();
    if (a.degree() == 0) return out;

    std::mt19937_64 rng(seed);
    std::vector<std::pair<FpPoly, unsigned>> squarefree_parts;
    squarefree_decomposition(a.make_monic(), 1, squarefree_parts);
    for (const auto& [part, mult] : squarefree_parts) {
        for (const auto& [prod, d] : distinct_degree_split(part)) {
            std::vector<FpPoly> irreducibles;
            equal_degree_split(prod, d, rng, irreducibles);
            for (auto& g : irreducibles) out.factors.emplace_back(std::move(g), mult);
        }
    }
    std::sort(out.factors.begin(), out.factors.end(), factor_order_less);
    return out;
}

bool is_irreducible(const FpPoly& g) {
    if (g.degree() < 1) return false;
    const unsigned d = static_cast<unsigned>(g.degree());
    if (d == 1) return true;
    const uint64_t p = g.modulus();
    FpPoly xm = fp_mod(FpPoly::x(p), g);
    if (frobenius_power(g, d) != xm) return false;
    unsigned rest = d;
    for (unsigned q = 2; q * q <= rest; ++q) {
        if (rest % q != 0) continue;
        while (rest % q == 0) rest /= q;
        if (fp_gcd(frobenius_power(g, d / q) - xm, g).degree() != 0) return false;
    }
    if (rest > 1) {
        if (fp_gcd(frobenius_power(g, d / rest) - xm, g).degree() != 0) return false;
    }
    return true;
}

}  // namespace ztheta
