/*
 * Copyright 2026 The balgame Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <doctest.h>

#include <cmath>
#include <vector>

#include "balgame/core.hpp"
#include "balgame/error.hpp"
#include "balgame/threshold.hpp"

using namespace balgame;

namespace {

// Pascal's triangle, independent of the multiplicative recurrence.
std::vector<std::vector<std::int64_t>> pascal(int rows)
{
    std::vector<std::vector<std::int64_t>> t(rows + 1);
    for (int n = 0; n <= rows; ++n) {
        t[n].assign(n + 1, 1);
        for (int k = 1; k < n; ++k) t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
    }
    return t;
}

} // namespace

TEST_CASE("binomial matches Pascal's triangle")
{
    const auto t = pascal(60);
    for (int n = 0; n <= 60; ++n)
        for (int k = 0; k <= n; ++k) CHECK(binomial(n, k) == t[n][k]);
    CHECK(binomial(5, 7) == 0);
    CHECK_THROWS_AS(binomial(70, 35), Error);
}

TEST_CASE("2-adic valuations")
{
    CHECK(nu2(12) == 2);
    CHECK(nu2(1) == 0);
    CHECK(nu2(binomial(4, 2)) == 1);
    CHECK(nu2(binomial(6, 3)) == 2);
    CHECK_THROWS_AS(nu2(0), Error);
    for (std::int64_t n = 0; n <= 20; ++n) {
        std::int64_t direct = 0;
        for (std::int64_t k = 2; k <= n; ++k) direct += nu2(k);
        CHECK(nu2_factorial(n) == direct);
    }
}

TEST_CASE("half central binomial parity")
{
    CHECK(half_central_parity(4) == Parity::Odd);
    CHECK(half_central_parity(6) == Parity::Even);
    CHECK(half_central_parity(1024) == Parity::Odd);
    CHECK_THROWS_AS(half_central_parity(5), Error);
    // Direct evaluation where C(n, n/2) fits in int64.
    for (std::int64_t n = 2; n <= 60; n += 2) {
        const bool odd = (binomial(n, n / 2) / 2) % 2 == 1;
        CHECK((half_central_parity(n) == Parity::Odd) == odd);
    }
    for (std::int64_t n = 2; n <= 2048; n += 2)
        CHECK((half_central_parity(n) == Parity::Odd) == is_power_of_two(n));
}

TEST_CASE("r closed form agrees with direct summation")
{
    CHECK(r_value(3) == 5);
    CHECK(r_value(4) == 10);
    for (std::int64_t n = 1; n <= 12; ++n) CHECK(r_value(n) == r_direct(canonical_family(static_cast<std::size_t>(n))));
    // r is also the max of u.1 over P(V).
    for (std::size_t n = 2; n <= 5; ++n) {
        const auto f = canonical_family(n);
        std::int64_t best = 0;
        for (const auto& u : enumerate_psum(f)) best = std::max(best, u.coord_sum());
        CHECK(best == r_value(static_cast<std::int64_t>(n)));
    }
}

TEST_CASE("critical M values")
{
    const std::vector<std::pair<std::int64_t, std::int64_t>> expected{{2, 1}, {3, 1}, {4, 3},  {5, 5},
                                                                      {6, 11}, {7, 22}, {8, 47}, {10, 193}};
    for (auto [n, m] : expected) {
        const auto rep = critical_M(n);
        CHECK(rep.m_crit_int == m);
        CHECK(rep.m_crit.is_integer());
        CHECK(rep.raw_bound.ceil() == m);
    }
    CHECK_THROWS_AS(critical_M(1), Error);
}

TEST_CASE("critical M from the three cases, evaluated independently")
{
    for (std::int64_t n = 2; n <= 40; ++n) {
        const std::int64_t p = std::int64_t{1} << (n - 2);
        Rational want;
        if (n % 2 == 1) want = Rational(p) - Rational(binomial(n - 1, (n - 1) / 2), 2);
        else {
            want = Rational(p) - Rational(binomial(n - 1, n / 2), 2);
            if (is_power_of_two(n)) want += Rational(1, 2);
        }
        CHECK(critical_M(n).m_crit == want);
    }
}

TEST_CASE("critical M is close to 2^(n-2)")
{
    for (std::int64_t n = 8; n <= 20; ++n) {
        const double ratio = static_cast<double>(critical_M(n).m_crit_int) / std::ldexp(1.0, static_cast<int>(n - 2));
        CHECK(ratio <= 1.0);
        CHECK(ratio >= 1.0 - 3.0 / std::sqrt(static_cast<double>(n)));
    }
}

TEST_CASE("windowed game flips exactly at the critical M")
{
    for (std::int64_t n : {2, 3, 4}) {
        const auto cv = cross_validate(n, 2);
        CHECK(cv.agrees);
        REQUIRE(cv.flip_at);
        CHECK(*cv.flip_at == cv.m_crit);
    }
    CHECK_THROWS_AS(cross_validate(5), Error);
}

TEST_CASE("dimension classes")
{
    CHECK(classify(7) == DimensionClass::Odd);
    CHECK(classify(12) == DimensionClass::EvenNotPowerOfTwo);
    CHECK(classify(16) == DimensionClass::PowerOfTwo);
    CHECK(to_string(DimensionClass::PowerOfTwo) == "pow2");
}
