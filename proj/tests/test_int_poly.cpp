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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "ztheta/int_poly.hpp"
#include "ztheta/mod_resultant.hpp"

using namespace ztheta;
using testutil::random_int_poly;
using testutil::random_monic_int_poly;
using testutil::sylvester_resultant;

TEST_CASE("integer helpers") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(1) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(20) == Integer("2432902008176640000"));
    CHECK(pow_integer(Integer(3), 0) == 1);
    CHECK(pow_integer(Integer(-2), 5) == -32);
    CHECK(pow_integer(Integer(10), 20) == Integer("100000000000000000000"));

    Integer q;
    CHECK(try_divexact(Integer(12), Integer(4), q));
    CHECK(q == 3);
    CHECK(try_divexact(Integer(-12), Integer(4), q));
    CHECK(q == -3);
    CHECK_FALSE(try_divexact(Integer(13), Integer(4), q));
    CHECK(try_divexact(Integer(0), Integer(7), q));
    CHECK(q == 0);
}

TEST_CASE("construction and normal form") {
    CHECK(IntPoly().is_zero());
    CHECK(IntPoly().degree() == -1);
    CHECK(IntPoly{0}.is_zero());
    CHECK(IntPoly{0, 0, 0}.is_zero());
    CHECK(IntPoly{1, 0, 0}.degree() == 0);
    CHECK(IntPoly{1, 2, 3}.degree() == 2);
    CHECK(IntPoly::zero() == IntPoly());
    CHECK(IntPoly::one() == IntPoly{1});
    CHECK(IntPoly::x() == IntPoly{0, 1});
    CHECK(IntPoly{2, 2, 1}.is_monic());
    CHECK_FALSE(IntPoly{1, 2}.is_monic());
    CHECK_FALSE(IntPoly().is_monic());

    CHECK(IntPoly{7, 8, 9}.leading() == 9);
    CHECK_THROWS_AS(IntPoly().leading(), std::logic_error);

    const IntPoly a{4, 5, 6};
    CHECK(a.coeff(0) == 4);
    CHECK(a.coeff(2) == 6);
    CHECK(a.coeff(3) == 0);
    CHECK(a.coeff(100) == 0);
}

TEST_CASE("ring operations") {
    std::mt19937_64 rng(101);
    for (int t = 0; t < 200; ++t) {
        const IntPoly a = random_int_poly(rng, static_cast<int>(rng() % 7) - 1, 30);
        const IntPoly b = random_int_poly(rng, static_cast<int>(rng() % 7) - 1, 30);
        const IntPoly c = random_int_poly(rng, static_cast<int>(rng() % 5) - 1, 30);
        CHECK(a + b == b + a);
        CHECK((a + b) - b == a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + IntPoly() == a);
        CHECK(a * IntPoly::one() == a);
        CHECK((a * IntPoly()).is_zero());
        CHECK(a - a == IntPoly());
        CHECK(-(-a) == a);
        CHECK(a * Integer(3) == a + a + a);
        CHECK(Integer(-1) * a == -a);

        const Integer t0(static_cast<long>(rng() % 19) - 9);
        CHECK((a + b).eval(t0) == a.eval(t0) + b.eval(t0));
        CHECK((a * b).eval(t0) == a.eval(t0) * b.eval(t0));
    }
}

TEST_CASE("degree bookkeeping under cancellation") {
    const IntPoly a{1, 2, 5};
    const IntPoly b{0, 0, -5};
    CHECK((a + b).degree() == 1);
    CHECK((a + b) == IntPoly{1, 2});
    CHECK((IntPoly{3, 1} - IntPoly{0, 1}) == IntPoly{3});
}

TEST_CASE("pow") {
    CHECK(pow(IntPoly{1, 1}, 0) == IntPoly::one());
    CHECK(pow(IntPoly(), 0) == IntPoly::one());
    CHECK(pow(IntPoly{1, 1}, 2) == IntPoly{1, 2, 1});
    CHECK(pow(IntPoly{1, 1}, 5) == IntPoly{1, 5, 10, 10, 5, 1});
    std::mt19937_64 rng(5);
    const IntPoly a = random_int_poly(rng, 3, 9);
    CHECK(pow(a, 4) == a * a * a * a);
}

TEST_CASE("derivative") {
    CHECK(derivative(IntPoly{7}).is_zero());
    CHECK(derivative(IntPoly()).is_zero());
    CHECK(derivative(IntPoly{1, 2, 3}) == IntPoly{2, 6});
    std::mt19937_64 rng(17);
    for (int t = 0; t < 100; ++t) {
        const IntPoly a = random_int_poly(rng, static_cast<int>(rng() % 6), 20);
        const IntPoly b = random_int_poly(rng, static_cast<int>(rng() % 6), 20);
        CHECK(derivative(a * b) == derivative(a) * b + a * derivative(b));
        CHECK(derivative(a + b) == derivative(a) + derivative(b));
    }
}

TEST_CASE("resultant anchors") {
    CHECK(resultant(IntPoly{-2, 1}, IntPoly{-3, 1}) == -1);
    CHECK(resultant(IntPoly{1, 0, 1}, IntPoly{0, 1}) == 1);
    CHECK(resultant(IntPoly{0, 1}, IntPoly{1, 0, 1}) == 1);
    // constant cases follow the lc-power convention
    CHECK(resultant(IntPoly{5}, IntPoly{3}) == 1);
    CHECK(resultant(IntPoly{5}, IntPoly{1, 2, 1}) == 25);
    CHECK(resultant(IntPoly{1, 2, 1}, IntPoly{5}) == 25);
    // shared root
    CHECK(resultant(IntPoly{-1, 1}, IntPoly{-1, 0, 1}) == 0);
    CHECK_THROWS_AS(resultant(IntPoly(), IntPoly{1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(resultant(IntPoly{1, 1}, IntPoly()), std::invalid_argument);
}

TEST_CASE("resultant properties on random inputs") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 120; ++t) {
        const int da = 1 + static_cast<int>(rng() % 6);
        const int db = 1 + static_cast<int>(rng() % 6);
        const IntPoly a = random_int_poly(rng, da, 12);
        const IntPoly b = random_int_poly(rng, db, 12);

        const Integer r = resultant(a, b);
        CHECK(r == sylvester_resultant(a, b));

        // swap symmetry
        const Integer swapped = resultant(b, a);
        const Integer expected = (da * db) % 2 == 1 ? -r : r;
        CHECK(swapped == expected);

        // Res(x - c, b) = b(c)
        const Integer c0(static_cast<long>(rng() % 21) - 10);
        CHECK(resultant(IntPoly{-c0, 1}, b) == b.eval(c0));
    }
}

TEST_CASE("resultant is multiplicative in the second slot") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 60; ++t) {
        const IntPoly a = random_int_poly(rng, 1 + static_cast<int>(rng() % 4), 9);
        const IntPoly b = random_int_poly(rng, 1 + static_cast<int>(rng() % 3), 9);
        const IntPoly c = random_int_poly(rng, 1 + static_cast<int>(rng() % 3), 9);
        CHECK(resultant(a, b * c) == resultant(a, b) * resultant(a, c));
    }
}

TEST_CASE("resultant vanishes exactly on a common factor") {
    std::mt19937_64 rng(37);
    for (int t = 0; t < 60; ++t) {
        const IntPoly g = random_monic_int_poly(rng, 1 + static_cast<int>(rng() % 2), 6);
        const IntPoly a = random_int_poly(rng, static_cast<int>(rng() % 3), 6) * g;
        const IntPoly b = random_int_poly(rng, static_cast<int>(rng() % 3), 6) * g;
        if (a.is_zero() || b.is_zero()) continue;
        CHECK(resultant(a, b) == 0);
    }
    for (int t = 0; t < 60; ++t) {
        const IntPoly a = random_int_poly(rng, 1 + static_cast<int>(rng() % 5), 10);
        const IntPoly b = random_int_poly(rng, 1 + static_cast<int>(rng() % 5), 10);
        const bool has_common = testutil::gcd_z_oracle(a, b).degree() > 0;
        CHECK((resultant(a, b) == 0) == has_common);
    }
}

TEST_CASE("discriminant anchors") {
    CHECK(discriminant(IntPoly{2, 2, 1}) == -4);
    CHECK(discriminant(IntPoly{-1, 0, 1}) == 4);
    CHECK(discriminant(IntPoly{2, 0, 2}) == -16);
    CHECK(discriminant(IntPoly{6, 6, 3, 1}) == -216);
    CHECK(discriminant(IntPoly{-1, 1}) == 1);
    // double root
    CHECK(discriminant(IntPoly{1, 2, 1}) == 0);
    CHECK_THROWS_AS(discriminant(IntPoly{5}), std::invalid_argument);
    CHECK_THROWS_AS(discriminant(IntPoly()), std::invalid_argument);
}

TEST_CASE("quadratic discriminant formula") {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 100; ++t) {
        const Integer a(static_cast<long>(rng() % 19) - 9);
        const Integer b(static_cast<long>(rng() % 19) - 9);
        const Integer c(static_cast<long>(rng() % 19) - 9);
        if (a == 0) continue;
        CHECK(discriminant(IntPoly{c, b, a}) == b * b - 4 * a * c);
    }
}

TEST_CASE("discriminant of a product of monics") {
    std::mt19937_64 rng(43);
    for (int t = 0; t < 80; ++t) {
        const IntPoly f = random_monic_int_poly(rng, 1 + static_cast<int>(rng() % 4), 10);
        const IntPoly g = random_monic_int_poly(rng, 1 + static_cast<int>(rng() % 4), 10);
        const Integer res_fg = resultant(f, g);
        CHECK(discriminant(f * g) == discriminant(f) * discriminant(g) * res_fg * res_fg);
    }
}

TEST_CASE("discriminant detects squarefreeness") {
    std::mt19937_64 rng(47);
    for (int t = 0; t < 80; ++t) {
        const IntPoly a = random_int_poly(rng, 1 + static_cast<int>(rng() % 6), 8);
        const bool squarefree = testutil::gcd_z_oracle(a, derivative(a)).degree() == 0;
        CHECK((discriminant(a) != 0) == squarefree);
    }
}

TEST_CASE("modular resultant agrees with the subresultant route") {
    std::mt19937_64 rng(53);
    for (int t = 0; t < 60; ++t) {
        const IntPoly a = random_int_poly(rng, 1 + static_cast<int>(rng() % 8), 1000000);
        const IntPoly b = random_int_poly(rng, 1 + static_cast<int>(rng() % 8), 1000000);
        CHECK(resultant_modular(a, b) == resultant(a, b));
    }
    for (int t = 0; t < 30; ++t) {
        const IntPoly a = random_int_poly(rng, 1 + static_cast<int>(rng() % 15), 50);
        CHECK(discriminant_modular(a) == discriminant(a));
    }
    // degenerate shapes
    CHECK(resultant_modular(IntPoly{5}, IntPoly{1, 2, 1}) == 25);
    CHECK(resultant_modular(IntPoly{1, 2, 1}, IntPoly{5}) == 25);
    CHECK(resultant_modular(IntPoly{5}, IntPoly{3}) == 1);
    CHECK(resultant_modular(IntPoly{-1, 1}, IntPoly{-1, 0, 1}) == 0);
    CHECK_THROWS_AS(resultant_modular(IntPoly(), IntPoly{1, 1}), std::invalid_argument);
}

TEST_CASE("modular resultant survives huge coefficients") {
    // coefficient sizes well past one CRT modulus
    const Integer big = pow_integer(Integer(10), 40);
    const IntPoly a{big, Integer(3), Integer(1)};
    const IntPoly b{Integer(-7), big, Integer(2)};
    CHECK(resultant_modular(a, b) == sylvester_resultant(a, b));
    CHECK(resultant_modular(a, b) == resultant(a, b));
}

TEST_CASE("to_string rendering") {
    CHECK(to_string(IntPoly()) == "0");
    CHECK(to_string(IntPoly{5}) == "5");
    CHECK(to_string(IntPoly{-5}) == "-5");
    CHECK(to_string(IntPoly{0, 1}) == "x");
    CHECK(to_string(IntPoly{0, -3}) == "-3*x");
    CHECK(to_string(IntPoly{1, 1}) == "x + 1");
    CHECK(to_string(IntPoly{-1, 0, 1}) == "x^2 - 1");
    CHECK(to_string(IntPoly{0, 0, -1}) == "-x^2");
    CHECK(to_string(IntPoly{2, -3, 1}) == "x^2 - 3*x + 2");
    CHECK(to_string(IntPoly{2, 2, 1}) == "x^2 + 2*x + 2");
}
