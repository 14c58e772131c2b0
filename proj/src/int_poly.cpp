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

#include "ztheta/int_poly.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace ztheta {

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer pow_integer(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

bool try_divexact(const Integer& a, const Integer& d, Integer& q) {
    if (d == 0) return false;
    Integer r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    return r == 0;
}

IntPoly::IntPoly(std::initializer_list<Integer> coeffs) : c_(coeffs) { trim(); }

IntPoly::IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::zero() { return IntPoly(); }

IntPoly IntPoly::one() { return IntPoly{1}; }

IntPoly IntPoly::x() { return IntPoly{0, 1}; }

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Integer& IntPoly::leading() const {
    if (c_.empty()) throw std::invalid_argument("leading: zero polynomial");
    return c_.back();
}

Integer IntPoly::coeff(size_t k) const {
    if (k >= c_.size()) return Integer(0);
    return c_[k];
}

Integer IntPoly::eval(const Integer& at) const {
    Integer acc = 0;
    for (size_t k = c_.size(); k-- > 0;) {
        acc = acc * at + c_[k];
    }
    return acc;
}

IntPoly IntPoly::operator-() const {
    std::vector<Integer> out(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) out[i] = -c_[i];
    return IntPoly(std::move(out));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    const auto& ac = a.coeffs();
    const auto& bc = b.coeffs();
    std::vector<Integer> out(std::max(ac.size(), bc.size()));
    for (size_t i = 0; i < out.size(); ++i) {
        if (i < ac.size()) out[i] += ac[i];
        if (i < bc.size()) out[i] += bc[i];
    }
    return IntPoly(std::move(out));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    const auto& ac = a.coeffs();
    const auto& bc = b.coeffs();
    std::vector<Integer> out(std::max(ac.size(), bc.size()));
    for (size_t i = 0; i < out.size(); ++i) {
        if (i < ac.size()) out[i] += ac[i];
        if (i < bc.size()) out[i] -= bc[i];
    }
    return IntPoly(std::move(out));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    const auto& ac = a.coeffs();
    const auto& bc = b.coeffs();
    std::vector<Integer> out(ac.size() + bc.size() - 1);
    for (size_t i = 0; i < ac.size(); ++i) {
        if (ac[i] == 0) continue;
        for (size_t j = 0; j < bc.size(); ++j) {
            mpz_addmul(out[i + j].get_mpz_t(), ac[i].get_mpz_t(), bc[j].get_mpz_t());
        }
    }
    return IntPoly(std::move(out));
}

IntPoly operator*(const IntPoly& a, const Integer& s) {
    if (s == 0) return IntPoly();
    std::vector<Integer> out(a.coeffs());
    for (auto& c : out) c *= s;
    return IntPoly(std::move(out));
}

IntPoly operator*(const Integer& s, const IntPoly& a) { return a * s; }

IntPoly pow(const IntPoly& a, unsigned e) {
    IntPoly result = IntPoly::one();
    IntPoly base = a;
    while (e != 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e != 0) base = base * base;
    }
    return result;
}

IntPoly derivative(const IntPoly& a) {
    if (a.degree() < 1) return IntPoly();
    const auto& ac = a.coeffs();
    std::vector<Integer> out(ac.size() - 1);
    for (size_t i = 1; i < ac.size(); ++i) {
        out[i - 1] = ac[i] * static_cast<unsigned long>(i);
    }
    return IntPoly(std::move(out));
}

namespace {

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q * b + r with deg r < deg b.
IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b) {
    const auto& bc = b.coeffs();
    const Integer& d = bc.back();
    const int db = b.degree();
    std::vector<Integer> r(a.coeffs());
    int dr = a.degree();
    int e = dr - db + 1;
    while (dr >= db) {
        Integer lead = r[static_cast<size_t>(dr)];
        for (int k = 0; k <= dr; ++k) r[static_cast<size_t>(k)] *= d;
        const int shift = dr - db;
        for (int j = 0; j <= db; ++j) {
            mpz_submul(r[static_cast<size_t>(shift + j)].get_mpz_t(), lead.get_mpz_t(),
                       bc[static_cast<size_t>(j)].get_mpz_t());
        }
        --e;
        --dr;
        while (dr >= 0 && r[static_cast<size_t>(dr)] == 0) --dr;
    }
    r.resize(static_cast<size_t>(dr + 1));
    if (e > 0) {
        Integer f = pow_integer(d, static_cast<unsigned long>(e));
        for (auto& c : r) c *= f;
    }
    return IntPoly(std::move(r));
}

Integer divexact_or_throw(const Integer& a, const Integer& d, const char* what) {
    Integer q;
    if (!try_divexact(a, d, q)) throw std::logic_error(what);
    return q;
}

IntPoly divexact_or_throw(const IntPoly& a, const Integer& d, const char* what) {
    std::vector<Integer> out(a.coeffs().size());
    for (size_t i = 0; i < out.size(); ++i) {
        out[i] = divexact_or_throw(a.coeffs()[i], d, what);
    }
    return IntPoly(std::move(out));
}

Integer discriminant_from_resultant(const IntPoly& a, const Integer& res) {
    Integer q;
    if (!try_divexact(res, a.leading(), q)) {
        throw std::logic_error("discriminant: resultant not divisible by leading coefficient");
    }
    const auto n = static_cast<unsigned long>(a.degree());
    if ((n * (n - 1) / 2) % 2 == 1) q = -q;
    return q;
}

}  // namespace

Integer resultant(const IntPoly& a0, const IntPoly& b0) {
    if (a0.is_zero() || b0.is_zero()) {
        throw std::invalid_argument("resultant: zero polynomial input");
    }
    IntPoly a = a0;
    IntPoly b = b0;
    if (a.degree() == 0 && b.degree() == 0) return Integer(1);
    if (a.degree() == 0) return pow_integer(a.leading(), static_cast<unsigned long>(b.degree()));
    if (b.degree() == 0) return pow_integer(b.leading(), static_cast<unsigned long>(a.degree()));

    int sign = 1;
    if (a.degree() < b.degree()) {
        if ((a.degree() & 1) && (b.degree() & 1)) sign = -sign;
        std::swap(a, b);
    }

    // Subresultant PRS with the g/h correction factors; every interior
    // division below is exact by the subresultant theory.
    Integer g = 1;
    Integer h = 1;
    while (true) {
        const int delta = a.degree() - b.degree();
        if ((a.degree() & 1) && (b.degree() & 1)) sign = -sign;
        IntPoly r = pseudo_rem(a, b);
        a = std::move(b);
        if (r.is_zero()) return Integer(0);
        Integer divisor = g * pow_integer(h, static_cast<unsigned long>(delta));
        b = divexact_or_throw(r, divisor, "resultant: inexact subresultant division");
        g = a.leading();
        if (delta == 1) {
            h = g;
        } else if (delta > 1) {
            h = divexact_or_throw(pow_integer(g, static_cast<unsigned long>(delta)),
                                  pow_integer(h, static_cast<unsigned long>(delta - 1)),
                                  "resultant: inexact h update");
        }
        if (b.degree() == 0) break;
    }

    Integer t = pow_integer(b.leading(), static_cast<unsigned long>(a.degree()));
    Integer res = divexact_or_throw(t, pow_integer(h, static_cast<unsigned long>(a.degree() - 1)),
                                    "resultant: inexact final division");
    return sign < 0 ? Integer(-res) : res;
}

Integer discriminant(const IntPoly& a) {
    if (a.degree() < 1) throw std::invalid_argument("discriminant: degree >= 1 required");
    return discriminant_from_resultant(a, resultant(a, derivative(a)));
}

std::string to_string(const IntPoly& a) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = a.degree(); k >= 0; --k) {
        Integer c = a.coeff(static_cast<size_t>(k));
        if (c == 0) continue;
        const bool negative = c < 0;
        Integer mag = negative ? Integer(-c) : c;
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        if (k == 0) {
            os << mag.get_str();
        } else {
            if (mag != 1) os << mag.get_str() << "*";
            os << "x";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPoly& a) { return os << to_string(a); }

}  // namespace ztheta
