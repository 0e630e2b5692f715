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

#include <algorithm>
#include <set>
#include <sstream>

#include "balgame/balance.hpp"
#include "balgame/error.hpp"
#include "balgame/threshold.hpp"
#include "support.hpp"

using namespace balgame;

namespace {

std::set<LatticeVector> as_set(const std::vector<LatticeVector>& vs) { return {vs.begin(), vs.end()}; }

LatticeVector random_pm1(std::mt19937_64& rng, std::size_t n)
{
    LatticeVector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = (rng() & 1) ? 1 : -1;
    return v;
}

} // namespace

TEST_CASE("majority signs for odd n")
{
    CHECK(odd_signs(3).signed_sum() == LatticeVector{2, 2, 2});
    CHECK(odd_signs(5).signed_sum() == 6 * LatticeVector::ones(5));
    for (std::size_t n = 3; n <= 15; n += 2) {
        const auto s = odd_signs(n);
        const auto c = binomial(static_cast<std::int64_t>(n - 1), static_cast<std::int64_t>((n - 1) / 2));
        CHECK(s.signed_sum() == c * LatticeVector::ones(n));
    }
    CHECK_THROWS_AS(odd_signs(4), Error);
}

TEST_CASE("middle layer")
{
    const auto m4 = middle_layer(4);
    CHECK(as_set(m4.members()) ==
          std::set<LatticeVector>{LatticeVector::from_binary("1100"), LatticeVector::from_binary("1010"),
                                  LatticeVector::from_binary("1001")});
    CHECK(middle_layer(2).members() == std::vector<LatticeVector>{LatticeVector{1, -1}});
    for (std::size_t n = 2; n <= 16; n += 2)
        CHECK(static_cast<std::int64_t>(middle_layer(n).size()) ==
              binomial(static_cast<std::int64_t>(n - 1), static_cast<std::int64_t>(n / 2)));
    CHECK_THROWS_AS(middle_layer(5), Error);
}

TEST_CASE("greedy pair systems")
{
    const auto ps = greedy_pairs(14, 7);
    CHECK(ps.vector_count() == 183);
    CHECK_FALSE(ps.check());
    for (std::size_t i = 2; i <= 14; ++i)
        for (std::size_t j = 1; j <= 7; ++j) {
            const auto d = ps.plus(i, j) - ps.minus(i, j);
            for (std::size_t c = 0; c < 14; ++c) CHECK(d[c] == (c == 0 ? 2 : c == i - 1 ? -2 : 0));
        }
    // Exhaustive distinctness up to sign, independent of the hash-based check.
    const auto vs = ps.vectors();
    for (std::size_t a = 0; a < vs.size(); ++a)
        for (std::size_t b = a + 1; b < vs.size(); ++b) CHECK((vs[a] != vs[b] && vs[a] != -vs[b]));

    CHECK_FALSE(greedy_pairs(16, 10).check());
    CHECK_THROWS_AS(greedy_pairs(12, 6), Error); // 252 is not above 264
    CHECK_THROWS_AS(greedy_pairs(7, 1), Error);
}

TEST_CASE("partial coloring bound on random families")
{
    std::mt19937_64 rng(101);
    for (std::size_t n = 2; n <= 16; n += 2) {
        for (int trial = 0; trial < 100; ++trial) {
            const std::size_t size = 1 + rng() % (trial < 90 ? 40 : 160);
            std::vector<LatticeVector> vs;
            for (std::size_t k = 0; k < size; ++k) vs.push_back(random_pm1(rng, n));
            const auto pc = partial_color(vs);
            LatticeVector x(n);
            for (std::size_t k = 0; k < vs.size(); ++k) {
                REQUIRE((pc.signs[k] == 1 || pc.signs[k] == -1));
                x += pc.signs[k] * vs[k];
            }
            CHECK(x == pc.sum);
            CHECK(x.norm_inf() <= static_cast<std::int64_t>(n));
            CHECK(pc.rounded <= n);
        }
    }
}

TEST_CASE("partial coloring small cases")
{
    const LatticeVector v{1, -1, 1, 1};
    const std::vector<LatticeVector> pair{v, -v};
    CHECK(partial_color(pair).sum.norm_inf() <= 4);
    const std::vector<LatticeVector> one{v};
    const auto single = partial_color(one);
    CHECK((single.sum == v || single.sum == -v));
    const std::vector<LatticeVector> bad{LatticeVector{2, 0}};
    CHECK_THROWS_AS(partial_color(bad), Error);
}

TEST_CASE("partial coloring on the middle layer outside a pair system")
{
    const auto ps = greedy_pairs(14, 7);
    std::set<LatticeVector> used;
    for (const auto& u : ps.vectors()) used.insert(sign_canonical(u));
    std::vector<LatticeVector> rest;
    for (const auto& v : middle_layer(14))
        if (!used.count(v)) rest.push_back(v);
    CHECK(rest.size() == 1716 - 183);
    CHECK(partial_color(rest).sum.norm_inf() <= 14);
}

namespace {

void check_expressions(std::size_t n, std::size_t r, std::uint64_t seed)
{
    const auto ps = greedy_pairs(n, r);
    const auto vs = ps.vectors();
    LatticeVector total(n);
    for (const auto& v : vs) total += v;
    const auto g = half(total);
    const auto R = static_cast<std::int64_t>(r);
    std::mt19937_64 rng(seed);

    auto distance = [&](const LatticeVector& t) {
        Rational d(0);
        for (std::size_t i = 0; i < n; ++i) {
            Rational x = Rational(t[i]) - g[i];
            if (x < Rational(0)) x = -x;
            if (d < x) d = x;
        }
        return d;
    };

    int accepted = 0, rejected = 0;
    while (accepted < 100) {
        // Random lattice point: one parity for all coordinates, zero sum.
        const std::int64_t parity = static_cast<std::int64_t>(rng() & 1);
        LatticeVector t(n);
        std::int64_t sum = 0;
        for (std::size_t i = 1; i < n; ++i) {
            const auto lo = (g[i] - Rational(R)).ceil(), hi = (g[i] + Rational(R)).floor();
            auto x = lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
            if (((x % 2) + 2) % 2 != parity) x = x + 1 <= hi ? x + 1 : x - 1;
            t[i] = x;
            sum += x;
        }
        t[0] = -sum;
        if (!lattice_member(t) || Rational(R) < distance(t)) continue;
        const auto subset = express_in_pairs(t, ps);
        LatticeVector got(n);
        for (std::size_t k = 0; k < vs.size(); ++k)
            if (subset[k]) got += vs[k];
        CHECK(got == t);
        ++accepted;

        // Push one coordinate just past the radius: still a lattice point, now rejected.
        LatticeVector far = t;
        const std::int64_t step = g[1] < Rational(t[1]) ? 2 : -2;
        while (!(Rational(R) < distance(far))) {
            far[1] += step;
            far[2] -= step;
        }
        if (distance(far) <= Rational(R + 2)) {
            CHECK(lattice_member(far));
            CHECK_THROWS_AS(express_in_pairs(far, ps), Error);
            ++rejected;
        }
    }
    CHECK(rejected > 0);
}

} // namespace

TEST_CASE("pair expressions reproduce their targets")
{
    check_expressions(14, 7, 1);
    check_expressions(16, 10, 2);
    check_expressions(16, 8, 3);
}

TEST_CASE("pair expression rejects points off the lattice")
{
    const auto ps = greedy_pairs(14, 7);
    LatticeVector t(14);
    t[0] = 1;
    t[1] = -1;
    CHECK_THROWS_AS(express_in_pairs(t, ps), Error);
}

TEST_CASE("rotation orbits of the signed middle layer")
{
    for (std::size_t n = 2; n <= 14; n += 2) {
        const auto orbits = orbit_decompose(n);
        std::set<LatticeVector> seen;
        for (const auto& o : orbits) {
            CHECK(n % o.members.size() == 0);
            LatticeVector s(n);
            for (const auto& v : o.members) {
                s += v;
                CHECK(seen.insert(v).second);
            }
            CHECK(s.is_zero());
            CHECK(rotate(o.members.back()) == o.members.front());
            const bool has_neg = std::count(o.members.begin(), o.members.end(), -o.representative) > 0;
            CHECK(has_neg == o.self_negating);
        }
        CHECK(static_cast<std::int64_t>(seen.size()) ==
              binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(n / 2)));
    }
}

TEST_CASE("self-negating orbit vectors are the reference table rows")
{
    for (auto n : reference_sign_table_sizes()) {
        std::set<LatticeVector> self_neg;
        for (const auto& o : orbit_decompose(n))
            if (o.self_negating) self_neg.insert(o.members.begin(), o.members.end());
        std::set<LatticeVector> rows;
        for (const auto& [e, v] : reference_sign_table(n).rows) rows.insert(v);
        CHECK(self_neg == rows);
    }
    CHECK(reference_sign_table(6).rows.size() == 8);
    CHECK(reference_sign_table(4).rows.size() == 6);
}

TEST_CASE("reference tables sum to their targets")
{
    for (auto n : reference_sign_table_sizes()) {
        const auto t = reference_sign_table(n);
        CHECK(t.antisymmetric());
        CHECK(t.sum() == reference_table_target(n));
    }
    CHECK(reference_table_target(4) == LatticeVector{6, -2, -2, -2});
    CHECK(reference_table_target(8) == LatticeVector{6, -2, -2, -2, 6, -2, -2, -2});
}

TEST_CASE("sign search")
{
    std::vector<LatticeVector> n4;
    for (const auto& [e, v] : reference_sign_table(4).rows) n4.push_back(v);
    const auto s = search_signs(n4, LatticeVector{6, -2, -2, -2});
    LatticeVector sum(4);
    for (std::size_t k = 0; k < n4.size(); ++k) sum += s[k] * n4[k];
    CHECK(sum == LatticeVector{6, -2, -2, -2});

    const LatticeVector v{1, -1, 1, -1};
    const std::vector<LatticeVector> pm{v, -v};
    CHECK(search_signs(pm, 2 * v) == std::vector<int>{1, -1});
    CHECK(search_signs(pm, -2 * v) == std::vector<int>{-1, 1});
    CHECK_THROWS_AS(search_signs(pm, LatticeVector(4)), Error);
    const std::vector<LatticeVector> lonely{v};
    CHECK_THROWS_AS(search_signs(lonely, 2 * v), Error);
}

TEST_CASE("sign search falls back to meet-in-the-middle")
{
    std::vector<LatticeVector> vs;
    for (const auto& [e, v] : reference_sign_table(12).rows) vs.push_back(v);
    const auto s = search_signs(vs, LatticeVector(12), 10);
    LatticeVector sum(12);
    for (std::size_t k = 0; k < vs.size(); ++k) sum += s[k] * vs[k];
    CHECK(sum.is_zero());
    for (std::size_t a = 0; a < vs.size(); ++a)
        for (std::size_t b = 0; b < vs.size(); ++b)
            if (vs[a] == -vs[b]) CHECK(s[a] == -s[b]);
}

TEST_CASE("middle-layer balance for every even n up to 16")
{
    for (std::size_t n = 2; n <= 16; n += 2) {
        const auto b = balance_middle(n);
        LatticeVector sum(n);
        for (std::size_t k = 0; k < b.layer->size(); ++k) {
            REQUIRE((b.signs[k] == 1 || b.signs[k] == -1));
            sum += b.signs[k] * (*b.layer)[k];
        }
        CHECK(sum == b.defect);
        const bool pow2 = is_power_of_two(static_cast<std::int64_t>(n));
        CHECK(b.defect.is_zero() == !pow2);
        if (pow2 && n > 2) {
            CHECK(b.plus_three_positions().size() == n / 4);
            CHECK(std::count(b.defect.values().begin(), b.defect.values().end(), -1) ==
                  static_cast<std::ptrdiff_t>(3 * n / 4));
        }
        CHECK(b.method == ((pow2 ? n >= 16 : n >= 14) ? BalanceMethod::PairPipeline : BalanceMethod::Orbits));
        const auto table = to_sign_table(b);
        CHECK(table.antisymmetric());
        CHECK(table.sum() == 2 * b.defect);
    }
    CHECK(balance_middle(2).defect == LatticeVector{-1, 1});
    CHECK(balance_middle(4).defect == LatticeVector{3, -1, -1, -1});
    CHECK(balance_middle(8).defect == LatticeVector{3, -1, -1, -1, 3, -1, -1, -1});
}

TEST_CASE("no balanced signs exist on the middle layer for n = 4")
{
    const auto layer = middle_layer(4);
    for (int mask = 0; mask < 8; ++mask) {
        LatticeVector s(4);
        for (std::size_t k = 0; k < 3; ++k) s += ((mask >> k) & 1 ? 1 : -1) * layer[k];
        CHECK_FALSE(s.is_zero());
    }
}

TEST_CASE("Chooser translate for n = 2")
{
    const auto p = chooser_translate(2);
    CHECK(p.bound == 1);
    CHECK(to_lattice(p.translate) == LatticeVector{-1, -1});
    CHECK(p.subset == std::vector<bool>{true, false});
}

TEST_CASE("Chooser translate: t + P(V) fits K_M and contains 0")
{
    for (std::size_t n = 2; n <= 5; ++n) {
        const auto p = chooser_translate(n);
        bool origin = false;
        for (const auto& u : testing::brute_psum(*p.family)) {
            const auto z = p.translate + to_rational(u);
            bool inside = true, zero = true;
            for (const auto& x : z) {
                inside = inside && x <= Rational(p.bound);
                zero = zero && x == Rational(0);
            }
            CHECK(inside);
            origin = origin || zero;
        }
        CHECK(origin);
    }
    for (std::size_t n = 2; n <= 16; ++n) {
        const auto p = chooser_translate(n);
        CHECK(p.bound == critical_M(static_cast<std::int64_t>(n)).m_crit_int);
        Rational top(INT64_MIN / 2);
        for (std::size_t i = 0; i < n; ++i) {
            Rational m = p.translate[i];
            for (const auto& v : *p.family)
                if (v[i] > 0) m += Rational(v[i]);
            CHECK(m == p.max_coords[i]);
            CHECK(m <= Rational(p.bound));
            if (top < m) top = m;
        }
        CHECK(top == Rational(p.bound)); // M is least, so some coordinate is tight
    }
}

TEST_CASE("sign table text")
{
    std::istringstream in("# comment\n+ 0011\n- 1100\n\n");
    const auto t = read_sign_table(in);
    CHECK(t.n == 4);
    CHECK(t.antisymmetric());
    std::ostringstream out;
    write_sign_table(out, t);
    CHECK(out.str() == "+ 0011\n- 1100\n");
    std::istringstream bad("* 0011\n");
    CHECK_THROWS_AS(read_sign_table(bad), Error);
    std::istringstream ragged("+ 0011\n- 110\n");
    CHECK_THROWS_AS(read_sign_table(ragged), Error);
}
