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

#ifndef ZTHETA_INT_POLY_HPP
#define ZTHETA_INT_POLY_HPP

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

namespace ztheta {

// Arbitrary-precision signed integer. Arithmetic never overflows silently and
// zero has a unique representation.
using Integer = mpz_class;

Integer factorial(unsigned long n);
Integer pow_integer(const Integer& base, unsigned long e);

// q = a / d when the division is exact; returns false otherwise (q unspecified).
bool try_divexact(const Integer& a, const Integer& d, Integer& q);

// Degree guard for polynomials built from end-user input (CLI coefficients,
// scan ranges, family degree n). Internal arithmetic is not capped.
inline constexpr unsigned kDefaultMaxDegree = 2000;

// Dense univariate polynomial over the integers. Coefficients are stored in
// ascending order of degree with no trailing zeros; the zero polynomial is the
// empty vector and reports degree() == -1.
class IntPoly {
  public:
    IntPoly() = default;
    IntPoly(std::initializer_list<Integer> coeffs);
    explicit IntPoly(std::vector<Integer> coeffs);

    static IntPoly zero();
    static IntPoly one();
    static IntPoly x();

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    // Leading coefficient; rejects the zero polynomial.
    const Integer& leading() const;

    // Coefficient of x^k, zero beyond the degree.
    Integer coeff(size_t k) const;

    const std::vector<Integer>& coeffs() const { return c_; }

    Integer eval(const Integer& at) const;

    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator!=(const IntPoly& o) const { return !(*this == o); }

    IntPoly operator-() const;

  private:
    void trim();

    std::vector<Integer> c_;
};

IntPoly operator+(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const IntPoly& a, const Integer& s);
IntPoly operator*(const Integer& s, const IntPoly& a);

IntPoly pow(const IntPoly& a, unsigned e);
IntPoly derivative(const IntPoly& a);

// Resultant in the Sylvester-determinant convention:
//   Res(a, b) = lc(a)^deg(b) * prod b(alpha_i) over the roots alpha_i of a,
// so Res(x - 2, x - 3) = -1 and Res(a, b) = (-1)^(deg a * deg b) Res(b, a).
// Computed exactly by the subresultant PRS; rejects zero inputs.
Integer resultant(const IntPoly& a, const IntPoly& b);

// disc(a) = (-1)^(n(n-1)/2) Res(a, a') / lc(a) for n = deg(a) >= 1. The
// division by lc(a) is checked; a failure would mean a resultant bug.
Integer discriminant(const IntPoly& a);

// Human-readable rendering in descending powers, e.g. "x^2 + 2*x + 2".
std::string to_string(const IntPoly& a);
std::ostream& operator<<(std::ostream& os, const IntPoly& a);

}  // namespace ztheta

#endif  // ZTHETA_INT_POLY_HPP
