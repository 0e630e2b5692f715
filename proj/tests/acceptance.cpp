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

// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "balgame/balance.hpp"
#include "balgame/coloring.hpp"
#include "balgame/core.hpp"
#include "balgame/error.hpp"
#include "balgame/game.hpp"
#include "balgame/threshold.hpp"
#include "balgame/witness.hpp"

using namespace balgame;

namespace {

struct Verdict {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what)
    {
        if (!ok && pass) detail = what;
        pass = pass && ok;
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

Verdict thresholds()
{
    Verdict o;
    const std::vector<std::pair<std::int64_t, std::int64_t>> want{{2, 1}, {3, 1}, {4, 3},  {5, 5},
                                                                  {6, 11}, {7, 22}, {8, 47}, {10, 193}};
    for (auto [n, m] : want) {
        const auto got = critical_M(n).m_crit_int;
        o.require(got == m, "n=" + std::to_string(n) + " gave " + std::to_string(got));
    }
    return o;
}

Verdict determinacy()
{
    Verdict o;
    for (std::int64_t n : {2, 3, 4}) {
        const auto cv = cross_validate(n, 2);
        o.require(cv.agrees && cv.flip_at && *cv.flip_at == cv.m_crit,
                  "n=" + std::to_string(n) + " flip does not match M_crit " + std::to_string(cv.m_crit));
        for (const auto& row : cv.rows)
            o.require((row.winner == Winner::Chooser) == (row.m >= cv.m_crit),
                      "n=" + std::to_string(n) + " M=" + std::to_string(row.m) + " has the wrong winner");
    }
    return o;
}

Verdict r_identity()
{
    Verdict o;
    o.require(r_value(3) == 5, "r(3) != 5");
    o.require(r_value(4) == 10, "r(4) != 10");
    for (std::int64_t n = 1; n <= 12; ++n)
        o.require(r_value(n) == r_direct(canonical_family(static_cast<std::size_t>(n))),
                  "closed form and direct sum differ at n=" + std::to_string(n));
    return o;
}

Verdict parity()
{
    Verdict o;
    std::vector<std::int64_t> odd;
    for (std::int64_t n = 2; n <= 2048; n += 2)
        if (half_central_parity(n) == Parity::Odd) odd.push_back(n);
    const std::vector<std::int64_t> pow2{2, 4, 8, 16, 32, 64, 128, 256, 512, 1024, 2048};
    o.require(odd == pow2, "odd cases are not exactly the powers of two");
    return o;
}

Verdict middle_balance()
{
    Verdict o;
    auto one = [&](std::size_t n, double budget) {
        const auto t0 = Clock::now();
        const auto b = balance_middle(n);
        const double dt = seconds_since(t0);
        LatticeVector sum(n);
        for (std::size_t k = 0; k < b.layer->size(); ++k) sum += b.signs[k] * (*b.layer)[k];
        o.require(sum == b.defect, "n=" + std::to_string(n) + " signed sum " + sum.to_string() + " != defect");
        o.require(dt < budget, "n=" + std::to_string(n) + " took " + std::to_string(dt) + " s");
        return b.defect;
    };
    for (std::size_t n : {6, 10, 12, 14})
        o.require(one(n, n <= 12 ? 10.0 : 300.0).is_zero(), "n=" + std::to_string(n) + " defect is not 0");
    for (std::size_t n : {4, 8, 16}) {
        const auto d = one(n, n <= 12 ? 10.0 : 300.0);
        std::size_t threes = 0, minus = 0;
        for (auto x : d.coords()) {
            threes += x == 3;
            minus += x == -1;
        }
        o.require(threes == n / 4 && minus == 3 * n / 4, "n=" + std::to_string(n) + " defect " + d.to_string());
    }
    return o;
}

Verdict fixtures()
{
    Verdict o;
    for (std::size_t n : {6, 10, 12}) {
        const auto t = reference_sign_table(n);
        o.require(t.sum().is_zero(), "table n=" + std::to_string(n) + " sums to " + t.sum().to_string());
        o.require(t.antisymmetric(), "table n=" + std::to_string(n) + " is not antisymmetric");
    }
    const std::vector<std::pair<std::size_t, LatticeVector>> printed{
        {4, LatticeVector{3, -1, -1, -1}}, {8, LatticeVector{3, -1, -1, -1, 3, -1, -1, -1}}};
    for (const auto& [n, w] : printed) {
        const auto t = reference_sign_table(n);
        o.require(t.sum() == 2 * w, "table n=" + std::to_string(n) + " sums to " + t.sum().to_string());
        o.require(t.antisymmetric(), "table n=" + std::to_string(n) + " is not antisymmetric");
    }
    return o;
}

Verdict chooser_construction()
{
    Verdict o;
    for (std::size_t n = 2; n <= 12; ++n) {
        const auto p = chooser_translate(n);
        const auto& f = *p.family;
        RationalVector at = p.translate;
        for (std::size_t k = 0; k < f.size(); ++k)
            if (p.subset[k]) at = at + to_rational(f[k]);
        bool zero = true;
        for (const auto& x : at) zero = zero && x == Rational(0);
        o.require(zero, "n=" + std::to_string(n) + ": t + sum(S0) = " + to_string(at));
        o.require(p.bound == critical_M(static_cast<std::int64_t>(n)).m_crit_int, "wrong M");
        if (n <= 5) {
            for (const auto& u : enumerate_psum(f)) {
                const auto z = p.translate + to_rational(u);
                for (const auto& x : z)
                    o.require(x <= Rational(p.bound), "n=" + std::to_string(n) + ": " + to_string(z) + " leaves K_M");
            }
        } else {
            for (std::size_t i = 0; i < n; ++i) {
                Rational top = p.translate[i];
                for (const auto& v : f)
                    if (v[i] > 0) top += Rational(v[i]);
                o.require(top <= Rational(p.bound), "n=" + std::to_string(n) + ": coordinate " +
                                                        std::to_string(i + 1) + " reaches " + top.to_string());
            }
        }
    }
    return o;
}

Verdict survival()
{
    Verdict o;
    for (std::size_t n : {4, 8, 12, 16}) {
        const auto p = chooser_translate(n);
        const auto region = GameRegion::uniform(n, p.bound);
        SubsetChooser chooser(ChooserEngine(*p.family, p.translate, p.subset));
        RandomPusher pusher(p.family->size(), 1000 + n);
        const auto tr = simulate(region, *p.family, chooser, pusher, 100'000);
        std::size_t violations = 0;
        for (const auto& r : tr.rounds) violations += !region.contains(r.position);
        o.require(tr.outcome == balgame::Outcome::ChooserSurvived && tr.rounds.size() == 100'000 && violations == 0,
                  "n=" + std::to_string(n) + ": " + std::string(to_string(tr.outcome)) + " after " +
                      std::to_string(tr.rounds.size()) + " rounds");
    }
    return o;
}

Verdict witnesses()
{
    Verdict o;
    std::mt19937_64 rng(2024);
    std::size_t instances = 0, certificates = 0;
    std::uint64_t seed = 0;
    while (instances < 100) {
        ++seed;
        const std::size_t dim = 2 + seed % 2;
        const std::size_t size = 1 + rng() % 4;
        std::uniform_int_distribution<int> coord(-1, 1);
        std::vector<LatticeVector> members;
        while (members.size() < size) {
            LatticeVector v(dim);
            for (std::size_t i = 0; i < dim; ++i) v[i] = coord(rng);
            bool clash = v.is_zero();
            for (const auto& u : members) clash = clash || parallel(u, v);
            if (!clash) members.push_back(v);
        }
        const VectorFamily f(dim, members);
        const auto t = random_vclosed(f, seed, 200);
        ++instances;
        try {
            for (const auto& x : extreme_points(t)) {
                if (!exposed_normal(t, x)) continue;
                const auto cert = translate_witness(t, f, x);
                o.require(cert.verified && replay(cert), "instance " + std::to_string(seed) + " failed to verify");
                ++certificates;
            }
        } catch (const Error& e) {
            o.require(false, "instance " + std::to_string(seed) + ": " + e.what());
        }
    }
    o.require(certificates >= instances, "too few exposed points examined");
    if (o.pass) o.detail = std::to_string(certificates) + " certificates over " + std::to_string(instances) + " sets";
    return o;
}

Verdict colorings()
{
    Verdict o;
    for (std::size_t m = 2; m <= 8; ++m) {
        const auto r = verify_coloring(color_msets(m));
        const bool pow2 = is_power_of_two(static_cast<std::int64_t>(m));
        o.require(r.ok(), "m=" + std::to_string(m) + " failed verification");
        o.require(r.mod4_constant, "m=" + std::to_string(m) + " R-B not constant mod 4");
        o.require(r.defect_class == (pow2 ? "power-of-2 pattern" : "balanced"),
                  "m=" + std::to_string(m) + " class " + r.defect_class);
        if (pow2) o.require(r.plus_three_elements.size() == m / 2, "m=" + std::to_string(m) + " wrong +3 count");
    }
    return o;
}

} // namespace

int main()
{
    struct Criterion {
        const char* name;
        double budget_s;
        std::function<Verdict()> run;
    };
    const std::vector<Criterion> criteria{
        {"threshold formulas", 1, thresholds},
        {"brute-force determinacy", 60, determinacy},
        {"r identity", 1, r_identity},
        {"half central binomial parity", 1, parity},
        {"middle-layer balance", 310, middle_balance},
        {"reference sign tables", 1, fixtures},
        {"Chooser construction", 120, chooser_construction},
        {"survival simulation", 120, survival},
        {"translate witnesses", 300, witnesses},
        {"balanced colorings", 300, colorings},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        const auto t0 = Clock::now();
        Verdict o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double dt = seconds_since(t0);
        if (dt > c.budget_s) {
            o.pass = false;
            o.detail = "over time budget";
        }
        failed += !o.pass;
        std::printf("%s  %2zu  %-30s %8.3f s%s%s\n", o.pass ? "PASS" : "FAIL", i + 1, c.name, dt,
                    o.detail.empty() ? "" : "  ", o.detail.c_str());
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
