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

#ifndef ZTHETA_FP_POLY_HPP
#define ZTHETA_FP_POLY_HPP

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "ztheta/int_poly.hpp"

namespace ztheta {

// Dense univariate polynomial over F_p for a machine-word prime p < 2^63.
// Coefficients are canonical residues in [0, p), ascending order, no trailing
// zeros; the zero polynomial has degree() == -1. Constructors check the
// modulus range but not primality: primality is enforced at the module
// boundaries (reduce_mod_p, factor, the Dedekind and scan entry points).
class FpPoly {
  public:
    FpPoly() = default;
    explicit FpPoly(uint64_t p);
    FpPoly(uint64_t p, std::vector<uint64_t> coeffs);
    FpPoly(uint64_t p, std::initializer_list<uint64_t> coeffs);

    static FpPoly x(uint64_t p);
    static FpPoly constant(uint64_t p, uint64_t c);

    uint64_t modulus() const { return p_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    uint64_t leading() const;
    uint64_t coeff(size_t k) const { return k < c_.size() ? c_[k] : 0; }
    const std::vector<uint64_t>& coeffs() const { return c_; }

    FpPoly make_monic() const;
    uint64_t eval(uint64_t at) const;

    bool operator==(const FpPoly& o) const { return p_ == o.p_ && c_ == o.c_; }
    bool operator!=(const FpPoly& o) const { return !(*this == o); }

  private:
    void trim();
    void require_nonnull() const;

    uint64_t p_ = 0;
    std::vector<uint64_t> c_;

    friend FpPoly operator+(const FpPoly& a, const FpPoly& b);
    friend FpPoly operator-(const FpPoly& a, const FpPoly& b);
    friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
};

FpPoly operator+(const FpPoly& a, const FpPoly& b);
FpPoly operator-(const FpPoly& a, const FpPoly& b);
FpPoly operator*(const FpPoly& a, const FpPoly& b);

// Quotient and remainder with deg(rem) < deg(b); b must be nonzero.
std::pair<FpPoly, FpPoly> fp_divrem(const FpPoly& a, const FpPoly& b);
FpPoly fp_mod(const FpPoly& a, const FpPoly& b);

FpPoly fp_derivative(const FpPoly& a);

// Monic gcd; fp_gcd(a, 0) is the monic scaling of a and fp_gcd(0, 0) = 0.
FpPoly fp_gcd(FpPoly a, FpPoly b);

// True iff d divides a; d must be nonzero. fp_divides(d, 0) is true.
bool fp_divides(const FpPoly& d, const FpPoly& a);

// True iff gcd(a, a') is constant; rejects the zero polynomial. Note that in
// characteristic p the derivative of a p-th power vanishes identically, so
// e.g. x^2 over F_2 is correctly reported non-separable.
bool is_separable(const FpPoly& a);

// base^e mod m for e >= 0; deg(m) >= 1 required.
FpPoly fp_pow_mod(const FpPoly& base, const Integer& e, const FpPoly& m);
FpPoly fp_pow_mod(const FpPoly& base, uint64_t e, const FpPoly& m);

// Coefficientwise reduction into F_p. Rejects composite or out-of-range p;
// the degree drops when leading coefficients vanish mod p.
FpPoly reduce_mod_p(const IntPoly& a, uint64_t p);

std::string to_string(const FpPoly& a);
std::ostream& operator<<(std::ostream& os, const FpPoly& a);

}  // namespace ztheta

#endif  // ZTHETA_FP_POLY_HPP
