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

#include <sstream>

#include "balgame/core.hpp"
#include "balgame/error.hpp"
#include "support.hpp"

using namespace balgame;

TEST_CASE("canonical family order and size")
{
    const auto f2 = canonical_family(2);
    REQUIRE(f2.size() == 2);
    CHECK(f2[0] == LatticeVector{1, 1});
    CHECK(f2[1] == LatticeVector{1, -1});
    for (std::size_t n = 1; n <= 10; ++n) {
        const auto f = canonical_family(n);
        CHECK(f.size() == (std::size_t{1} << (n - 1)));
        CHECK_NOTHROW(VectorFamily(n, f.members())); // passes full validation, including no parallels
    }
    CHECK_THROWS_AS(canonical_family(0), Error);
}

TEST_CASE("family validation")
{
    CHECK_THROWS_AS((VectorFamily(2, {LatticeVector{1, 2}, LatticeVector{2, 4}})), Error);
    CHECK_NOTHROW((VectorFamily(2, {LatticeVector{1, 2}, LatticeVector{2, 4}}, "", false)));
    CHECK_THROWS_AS((VectorFamily(2, {LatticeVector{0, 0}})), Error);
    CHECK_THROWS_AS((VectorFamily(2, {LatticeVector{1, 0, 0}})), Error);
}

TEST_CASE("P(V) for the canonical family in dimension 3 has 15 points")
{
    const auto f = canonical_family(3);
    const auto p = enumerate_psum(f);
    const auto oracle = testing::brute_psum(f);
    CHECK(oracle.size() == 15); // 16 subsets; only (2,0,0) arises twice
    CHECK(p.size() == oracle.size());
    for (const auto& u : oracle) CHECK(p.contains(u));
}

TEST_CASE("set doubling agrees with bitmask enumeration on random families")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const auto f = testing::random_family(rng, 2 + trial % 3, 1 + trial % 7);
        const auto p = enumerate_psum(f);
        const auto oracle = testing::brute_psum(f);
        REQUIRE(p.size() == oracle.size());
        for (const auto& u : oracle) CHECK(p.contains(u));
    }
}

TEST_CASE("P(V) is symmetric about g(V)")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const auto f = testing::random_family(rng, 3, 5);
        const auto p = enumerate_psum(f);
        const auto total = family_sum(f);
        for (const auto& u : p) CHECK(p.contains(total - u));
    }
}

TEST_CASE("zonotope vertex maximizes the linear functional over P(V)")
{
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> coord(-9, 9);
    int checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const auto f = testing::random_family(rng, 3, 1 + trial % 8);
        LatticeVector a(3);
        for (std::size_t i = 0; i < 3; ++i) a[i] = coord(rng);
        bool degenerate = false;
        for (const auto& v : f) degenerate = degenerate || a.dot(v) == 0;
        if (degenerate) {
            CHECK_THROWS_AS(zonotope_vertex(f, a), Error);
            continue;
        }
        const auto p = zonotope_vertex(f, a);
        const auto oracle = testing::brute_psum(f);
        CHECK(oracle.count(p) == 1);
        for (const auto& u : oracle) CHECK(a.dot(p) >= a.dot(u));
        ++checked;
    }
    CHECK(checked > 50);
}

TEST_CASE("center and width")
{
    const auto f = canonical_family(3);
    const auto g = center(f);
    CHECK(g[0] == Rational(2));
    CHECK(g[1] == Rational(0));
    CHECK(family_width(f, 0) == 4);
    const auto p = enumerate_psum(f);
    for (std::size_t i = 0; i < 3; ++i) {
        std::int64_t lo = 0, hi = 0;
        for (const auto& u : p) {
            lo = std::min(lo, u[i]);
            hi = std::max(hi, u[i]);
        }
        CHECK(hi - lo == family_width(f, i));
    }
}

TEST_CASE("psum cap")
{
    CHECK_THROWS_AS(enumerate_psum(canonical_family(6), 100), Error);
}

TEST_CASE("middle-layer lattice membership")
{
    CHECK(lattice_member(LatticeVector{1, -1, 1, -1}));
    CHECK(lattice_member(LatticeVector{2, 0, -2, 0}));
    CHECK(lattice_member(LatticeVector{3, -1, -1, -1}));
    CHECK_FALSE(lattice_member(LatticeVector{2, -1, -1, 0}));
    CHECK_FALSE(lattice_member(LatticeVector{1, 1, 1, -1}));
    CHECK_THROWS_AS((lattice_member(LatticeVector{1, -1, 0})), Error);
}

TEST_CASE("family and point set files round trip")
{
    const auto f = canonical_family(4);
    for (bool binary : {false, true}) {
        std::stringstream ss;
        write_family(ss, f, binary);
        const auto back = read_family(ss);
        CHECK(back.members() == f.members());
    }
    std::istringstream bad("dim 2\n1,2,3\n");
    CHECK_THROWS_AS(read_family(bad), Error);

    PointSet s(2, {LatticeVector{0, 1}, LatticeVector{-3, 2}});
    std::stringstream ss;
    write_point_set(ss, s);
    const auto back = read_point_set(ss);
    CHECK(back.size() == 2);
    CHECK(back.contains(LatticeVector{-3, 2}));
}

TEST_CASE("family sums and centers")
{
    CHECK(family_sum(canonical_family(3)) == LatticeVector{4, 0, 0});
    for (std::size_t n = 1; n <= 10; ++n)
        CHECK(family_sum(canonical_family(n)) == (std::int64_t{1} << (n - 1)) * LatticeVector::unit(n, 0));
    const VectorFamily empty(3, {});
    CHECK(family_sum(empty).is_zero());
    const auto p = enumerate_psum(empty);
    CHECK(p.size() == 1);
    CHECK(p.contains(LatticeVector(3)));
    // Middle layer for n = 4 by hand: 1100 + 1010 + 1001.
    const VectorFamily mid(4, {LatticeVector::from_binary("1100"), LatticeVector::from_binary("1010"),
                               LatticeVector::from_binary("1001")});
    CHECK(family_sum(mid) == LatticeVector{3, -1, -1, -1});
}

TEST_CASE("P(V) for the canonical family in dimension 2")
{
    const auto p = enumerate_psum(canonical_family(2));
    CHECK(p.sorted() == std::vector<LatticeVector>{{0, 0}, {1, -1}, {1, 1}, {2, 0}});
}

TEST_CASE("zonotope vertex examples")
{
    CHECK(zonotope_vertex(canonical_family(2), LatticeVector{1, 0}) == LatticeVector{2, 0});
    CHECK(zonotope_vertex(canonical_family(3), LatticeVector::ones(3)) == LatticeVector{3, 1, 1});
    CHECK_THROWS_AS(zonotope_vertex(canonical_family(2), LatticeVector{1, 1}), Error);
    CHECK(zonotope_vertex(canonical_family(2), RationalVector{Rational(1, 2), Rational(1, 3)}) == LatticeVector{2, 0});
}

TEST_CASE("widths of the canonical family")
{
    CHECK(family_width(canonical_family(2), 0) == 2);
    CHECK(family_width(canonical_family(2), 1) == 2);
    for (std::size_t i = 0; i < 5; ++i) CHECK(family_width(canonical_family(5), i) == 16);
    for (std::size_t n = 1; n <= 12; ++n) {
        const auto f = canonical_family(n);
        for (std::size_t i = 0; i < n; ++i) CHECK(family_width(f, i) == (std::int64_t{1} << (n - 1)));
    }
}

TEST_CASE("center of the middle layer lies in the lattice")
{
    const auto f = canonical_family(6);
    std::vector<LatticeVector> mid;
    for (const auto& v : f)
        if (v.coord_sum() == 0) mid.push_back(v);
    const auto g = center(VectorFamily(6, mid));
    CHECK(lattice_member(to_lattice(g)));
}
