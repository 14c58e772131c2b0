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

#include "ztheta/dedekind.hpp"

#include <stdexcept>

#include "ztheta/primes.hpp"

namespace ztheta {

IntPoly lift_monic(const FpPoly& g) {
    if (!g.is_monic()) throw std::invalid_argument("lift_monic: polynomial must be monic");
    std::vector<Integer> out(g.coeffs().size());
    for (size_t i = 0; i < out.size(); ++i) {
        out[i] = Integer(static_cast<unsigned long>(g.coeffs()[i]));
    }
    return IntPoly(std::move(out));
}

IntPoly dedekind_m(const IntPoly& f, uint64_t p, const IntPoly& lifted_product) {
    if (!f.is_monic()) throw std::invalid_argument("dedekind_m: f must be monic");
    const IntPoly diff = f - lifted_product;
    const Integer prime(static_cast<unsigned long>(p));
    std::vector<Integer> out(diff.coeffs().size());
    for (size_t i = 0; i < out.size(); ++i) {
        if (!try_divexact(diff.coeffs()[i], prime, out[i])) {
            throw std::invalid_argument("dedekind_m: lifted product is not congruent to f mod p");
        }
    }
    return IntPoly(std::move(out));
}

LiftedCriterion dedekind_with_lifts(const IntPoly& f, uint64_t p,
                                    const std::vector<std::pair<IntPoly, unsigned>>& lifted_factors) {
    if (!f.is_monic() || f.degree() < 1) {
        throw std::invalid_argument("dedekind_with_lifts: f must be monic of degree >= 1");
    }
    if (!is_prime(p)) throw std::invalid_argument("dedekind_with_lifts: p must be prime");

    LiftedCriterion crit;
    crit.lifted_product = IntPoly::one();
    for (const auto& [lift, e] : lifted_factors) {
        if (!lift.is_monic()) {
            throw std::invalid_argument("dedekind_with_lifts: every lift must be monic");
        }
        if (e == 0) throw std::invalid_argument("dedekind_with_lifts: zero exponent");
        crit.lifted_product = crit.lifted_product * pow(lift, e);
    }
    crit.m_poly = dedekind_m(f, p, crit.lifted_product);

    const FpPoly m_bar = reduce_mod_p(crit.m_poly, p);
    crit.divides_m.resize(lifted_factors.size(), false);
    for (size_t i = 0; i < lifted_factors.size(); ++i) {
        const auto& [lift, e] = lifted_factors[i];
        if (e < 2) continue;
        crit.divides_m[i] = fp_divides(reduce_mod_p(lift, p), m_bar);
        if (crit.divides_m[i]) crit.index_divisible_by_p = true;
    }
    return crit;
}

DedekindReport dedekind_test(const IntPoly& f, uint64_t p, uint64_t seed) {
    if (!f.is_monic() || f.degree() < 1) {
        throw std::invalid_argument("dedekind_test: f must be monic of degree >= 1");
    }
    if (!is_prime(p)) throw std::invalid_argument("dedekind_test: p must be prime");

    DedekindReport report;
    report.p = p;
    report.f = f;
    const FpPoly f_bar = reduce_mod_p(f, p);
    report.factorization = factor(f_bar, seed);

    std::vector<std::pair<IntPoly, unsigned>> lifts;
    lifts.reserve(report.factorization.factors.size());
    for (const auto& [g, e] : report.factorization.factors) {
        lifts.emplace_back(lift_monic(g), e);
    }
    LiftedCriterion crit = dedekind_with_lifts(f, p, lifts);
    report.lifted_product = std::move(crit.lifted_product);
    report.m_poly = std::move(crit.m_poly);
    report.index_divisible_by_p = crit.index_divisible_by_p;

    report.per_factor.reserve(report.factorization.factors.size());
    for (size_t i = 0; i < report.factorization.factors.size(); ++i) {
        const auto& [g, e] = report.factorization.factors[i];
        FactorVerdict v;
        v.factor = g;
        v.exponent = e;
        v.needs_check = e >= 2;
        v.divides_m = crit.divides_m[i];
        report.per_factor.push_back(std::move(v));
    }
    return report;
}

}  // namespace ztheta
