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

#include "ztheta/fp_poly.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

#include "ztheta/primes.hpp"

namespace ztheta {

namespace {

void check_modulus_range(uint64_t p) {
    if (p < 2 || p >= (1ull << 63)) {
        throw std::invalid_argument("FpPoly: modulus must satisfy 2 <= p < 2^63");
    }
}

void require_same_modulus(const FpPoly& a, const FpPoly& b) {
    if (a.modulus() != b.modulus()) {
        throw std::invalid_argument("FpPoly: modulus mismatch");
    }
}

}  // namespace

FpPoly::FpPoly(uint64_t p) : p_(p) { check_modulus_range(p); }

FpPoly::FpPoly(uint64_t p, std::vector<uint64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
    check_modulus_range(p);
    for (auto& c : c_) c %= p_;
    trim();
}

FpPoly::FpPoly(uint64_t p, std::initializer_list<uint64_t> coeffs)
    : FpPoly(p, std::vector<uint64_t>(coeffs)) {}

FpPoly FpPoly::x(uint64_t p) { return FpPoly(p, {0, 1}); }

FpPoly FpPoly::constant(uint64_t p, uint64_t c) { return FpPoly(p, {c}); }

void FpPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void FpPoly::require_nonnull() const {
    if (p_ == 0) throw std::logic_error("FpPoly: operation on default-constructed polynomial");
}

uint64_t FpPoly::leading() const {
    require_nonnull();
    if (c_.empty()) throw std::invalid_argument("FpPoly::leading: zero polynomial");
    return c_.back();
}

FpPoly FpPoly::make_monic() const {
    require_nonnull();
    if (c_.empty()) return *this;
    if (c_.back() == 1) return *this;
    const uint64_t inv = inv_mod(c_.back(), p_);
    std::vector<uint64_t> out(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) out[i] = mul_mod(c_[i], inv, p_);
    return FpPoly(p_, std::move(out));
}

uint64_t FpPoly::eval(uint64_t at) const {
    require_nonnull();
    at %= p_;
    uint64_t acc = 0;
    for (size_t k = c_.size(); k-- > 0;) {
        acc = add_mod(mul_mod(acc, at, p_), c_[k], p_);
    }
    return acc;
}

FpPoly operator+(const FpPoly& a, const FpPoly& b) {
    a.require_nonnull();
    require_same_modulus(a, b);
    const uint64_t p = a.p_;
    std::vector<uint64_t> out(std::max(a.c_.size(), b.c_.size()), 0);
    for (size_t i = 0; i < out.size(); ++i) {
        uint64_t s = i < a.c_.size() ? a.c_[i] : 0;
        if (i < b.c_.size()) s = add_mod(s, b.c_[i], p);
        out[i] = s;
    }
    return FpPoly(p, std::move(out));
}

FpPoly operator-(const FpPoly& a, const FpPoly& b) {
    a.require_nonnull();
    require_same_modulus(a, b);
    const uint64_t p = a.p_;
    std::vector<uint64_t> out(std::max(a.c_.size(), b.c_.size()), 0);
    for (size_t i = 0; i < out.size(); ++i) {
        uint64_t s = i < a.c_.size() ? a.c_[i] : 0;
        if (i < b.c_.size()) s = sub_mod(s, b.c_[i], p);
        out[i] = s;
    }
    return FpPoly(p, std::move(out));
}

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
    a.require_nonnull();
    require_same_modulus(a, b);
    const uint64_t p = a.p_;
    if (a.is_zero() || b.is_zero()) return FpPoly(p);
    std::vector<uint64_t> out(a.c_.size() + b.c_.size() - 1, 0);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            out[i + j] = add_mod(out[i + j], mul_mod(a.c_[i], b.c_[j], p), p);
        }
    }
    return FpPoly(p, std::move(out));
}

std::pair<FpPoly, FpPoly> fp_divrem(const FpPoly& a, const FpPoly& b) {
    require_same_modulus(a, b);
    if (b.is_zero()) throw std::invalid_argument("fp_divrem: division by zero polynomial");
    const uint64_t p = a.modulus();
    const int db = b.degree();
    if (a.degree() < db) return {FpPoly(p), a};
    std::vector<uint64_t> r(a.coeffs());
    std::vector<uint64_t> q(static_cast<size_t>(a.degree() - db + 1), 0);
    const uint64_t inv = inv_mod(b.leading(), p);
    for (int k = a.degree(); k >= db; --k) {
        const uint64_t t = mul_mod(r[static_cast<size_t>(k)], inv, p);
        if (t == 0) continue;
        q[static_cast<size_t>(k - db)] = t;
        for (int j = 0; j <= db; ++j) {
            auto& cell = r[static_cast<size_t>(k - db + j)];
            cell = sub_mod(cell, mul_mod(t, b.coeff(static_cast<size_t>(j)), p), p);
        }
    }
    return {FpPoly(p, std::move(q)), FpPoly(p, std::move(r))};
}

FpPoly fp_mod(const FpPoly& a, const FpPoly& b) { return fp_divrem(a, b).second; }

FpPoly fp_derivative(const FpPoly& a) {
    const uint64_t p = a.modulus();
    if (p == 0) throw std::logic_error("fp_derivative: default-constructed polynomial");
    if (a.degree() < 1) return FpPoly(p);
    std::vector<uint64_t> out(static_cast<size_t>(a.degree()), 0);
    for (size_t i = 1; i < a.coeffs().size(); ++i) {
        out[i - 1] = mul_mod(a.coeffs()[i], i % p, p);
    }
    return FpPoly(p, std::move(out));
}

FpPoly fp_gcd(FpPoly a, FpPoly b) {
    require_same_modulus(a, b);
    while (!b.is_zero()) {
        FpPoly r = fp_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.make_monic();
}

bool fp_divides(const FpPoly& d, const FpPoly& a) {
    if (d.is_zero()) throw std::invalid_argument("fp_divides: zero divisor");
    return fp_mod(a, d).is_zero();
}

bool is_separable(const FpPoly& a) {
    if (a.is_zero()) throw std::invalid_argument("is_separable: zero polynomial");
    return fp_gcd(a, fp_derivative(a)).degree() == 0;
}

FpPoly fp_pow_mod(const FpPoly& base, const Integer& e, const FpPoly& m) {
    if (e < 0) throw std::invalid_argument("fp_pow_mod: negative exponent");
    if (m.degree() < 1) throw std::invalid_argument("fp_pow_mod: modulus polynomial must have degree >= 1");
    require_same_modulus(base, m);
    const uint64_t p = m.modulus();
    FpPoly result = FpPoly::constant(p, 1);
    if (e == 0) return result;
    FpPoly b = fp_mod(base, m);
    const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
        result = fp_mod(result * result, m);
        if (mpz_tstbit(e.get_mpz_t(), i)) result = fp_mod(result * b, m);
    }
    return result;
}

FpPoly fp_pow_mod(const FpPoly& base, uint64_t e, const FpPoly& m) {
    return fp_pow_mod(base, Integer(static_cast<unsigned long>(e)), m);
}

FpPoly reduce_mod_p(const IntPoly& a, uint64_t p) {
    check_modulus_range(p);
    if (!is_prime(p)) throw std::invalid_argument("reduce_mod_p: modulus must be prime");
    std::vector<uint64_t> out(a.coeffs().size());
    for (size_t i = 0; i < out.size(); ++i) {
        out[i] = mpz_fdiv_ui(a.coeffs()[i].get_mpz_t(), p);
    }
    return FpPoly(p, std::move(out));
}

std::string to_string(const FpPoly& a) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = a.degree(); k >= 0; --k) {
        const uint64_t c = a.coeff(static_cast<size_t>(k));
        if (c == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (k == 0) {
            os << c;
        } else {
            if (c != 1) os << c << "*";
            os << "x";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const FpPoly& a) { return os << to_string(a); }

}  // namespace ztheta
