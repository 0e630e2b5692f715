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

#include "balgame/balance.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "balgame/error.hpp"
#include "balgame/threshold.hpp"

namespace balgame {
namespace detail {
std::string_view reference_sign_table_text(std::size_t n);
} // namespace detail

namespace {

using VectorSet = std::unordered_set<LatticeVector, LatticeVectorHash>;

void require_even(std::size_t n, const char* what)
{
    if (n < 2 || n % 2 != 0)
        throw Error(ErrorKind::InvalidDimension, std::string(what) + " needs even n >= 2, got " + std::to_string(n));
    if (n > kMaxCanonicalDim)
        throw Error(ErrorKind::Range, std::string(what) + " limited to n <= " + std::to_string(kMaxCanonicalDim));
}

// The +-1 vector whose coordinate i is +1 iff bit (n-1-i) of mask is set.
LatticeVector from_mask(std::uint64_t mask, std::size_t n)
{
    LatticeVector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = (mask >> (n - 1 - i)) & 1U ? 1 : -1;
    return v;
}

// Middle layer and its negation, by increasing 0/1 string.
std::vector<LatticeVector> signed_middle_layer(std::size_t n)
{
    std::vector<LatticeVector> out;
    const std::uint64_t end = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < end; ++mask)
        if (static_cast<std::size_t>(std::popcount(mask)) == n / 2) out.push_back(from_mask(mask, n));
    return out;
}

} // namespace

LatticeVector SignAssignment::signed_sum() const
{
    LatticeVector s(family->dim());
    for (std::size_t k = 0; k < signs.size(); ++k) s += signs[k] * (*family)[k];
    return s;
}

std::vector<bool> SignAssignment::positive_subset() const
{
    std::vector<bool> out(signs.size());
    for (std::size_t k = 0; k < signs.size(); ++k) out[k] = signs[k] > 0;
    return out;
}

SignAssignment odd_signs(std::size_t n)
{
    if (n < 3 || n % 2 == 0)
        throw Error(ErrorKind::InvalidDimension, "odd_signs needs odd n >= 3, got " + std::to_string(n));
    SignAssignment a;
    a.family = std::make_shared<const VectorFamily>(canonical_family(n));
    a.signs.reserve(a.family->size());
    for (const auto& v : *a.family) a.signs.push_back(v.coord_sum() > 0 ? 1 : -1);
    const auto c = binomial(static_cast<std::int64_t>(n - 1), static_cast<std::int64_t>((n - 1) / 2));
    if (a.signed_sum() != c * LatticeVector::ones(n))
        throw Error(ErrorKind::ConstructionFailed, "majority signs do not sum to C(n-1,(n-1)/2) * 1");
    return a;
}

VectorFamily middle_layer(std::size_t n)
{
    require_even(n, "middle_layer");
    auto all = canonical_family(n);
    std::vector<LatticeVector> members;
    for (const auto& v : all)
        if (v.coord_sum() == 0) members.push_back(v);
    return VectorFamily::unchecked(n, std::move(members), "middle-" + std::to_string(n), true);
}

LatticeVector sign_canonical(const LatticeVector& v)
{
    for (auto c : v.coords()) {
        if (c > 0) return v;
        if (c < 0) return -v;
    }
    return v;
}

std::vector<LatticeVector> PairSystem::vectors() const
{
    std::vector<LatticeVector> out;
    out.reserve(vector_count());
    for (const auto& [p, m] : pairs_) {
        out.push_back(p);
        out.push_back(m);
    }
    out.push_back(extra_);
    return out;
}

std::optional<std::string> PairSystem::check() const
{
    if (pairs_.size() != (n_ - 1) * r_) return "wrong number of pairs";
    for (std::size_t i = 2; i <= n_; ++i)
        for (std::size_t j = 1; j <= r_; ++j) {
            const auto diff = plus(i, j) - minus(i, j);
            const auto expect = 2 * (LatticeVector::unit(n_, 0) - LatticeVector::unit(n_, i - 1));
            if (diff != expect)
                return "pair (" + std::to_string(i) + "," + std::to_string(j) + ") does not differ by 2(e_1 - e_i)";
        }
    VectorSet seen;
    for (const auto& v : vectors()) {
        if (v.dim() != n_ || v.coord_sum() != 0) return "vector " + v.to_string() + " is not in the middle layer";
        for (auto c : v.coords())
            if (c != 1 && c != -1) return "vector " + v.to_string() + " has an entry other than +-1";
        if (!seen.insert(sign_canonical(v)).second) return "vector " + v.to_string() + " repeats up to sign";
    }
    return std::nullopt;
}

PairSystem greedy_pairs(std::size_t n, std::size_t r)
{
    require_even(n, "greedy_pairs");
    if (n < 4 || r == 0) throw Error(ErrorKind::PreconditionViolated, "greedy_pairs needs n >= 4 and R >= 1");
    const auto avail = binomial(static_cast<std::int64_t>(n - 2), static_cast<std::int64_t>((n - 2) / 2));
    const auto need = checked_mul(4 * static_cast<std::int64_t>(r), static_cast<std::int64_t>(n - 1));
    if (avail <= need)
        throw Error(ErrorKind::PreconditionViolated, "C(n-2,(n-2)/2) = " + std::to_string(avail) +
                                                         " is not greater than 4R(n-1) = " + std::to_string(need));

    // Balanced sign patterns for the n-2 free coordinates, +1-heavy first.
    std::vector<std::uint64_t> patterns;
    for (std::uint64_t m = (std::uint64_t{1} << (n - 2)); m-- > 0;)
        if (static_cast<std::size_t>(std::popcount(m)) == (n - 2) / 2) patterns.push_back(m);

    PairSystem ps(n, r);
    VectorSet used;
    for (std::size_t i = 2; i <= n; ++i) {
        const std::size_t k = i - 1;
        std::size_t cursor = 0;
        for (std::size_t j = 1; j <= r; ++j) {
            bool placed = false;
            while (cursor < patterns.size() && !placed) {
                const auto m = patterns[cursor++];
                LatticeVector p(n);
                p[0] = 1;
                p[k] = -1;
                std::size_t bit = n - 2;
                for (std::size_t c = 1; c < n; ++c)
                    if (c != k) p[c] = (m >> --bit) & 1U ? 1 : -1;
                LatticeVector q = p;
                q[0] = -1;
                q[k] = 1;
                const auto cp = sign_canonical(p), cq = sign_canonical(q);
                if (used.count(cp) || used.count(cq)) continue;
                used.insert(cp);
                used.insert(cq);
                ps.pairs_.emplace_back(std::move(p), std::move(q));
                placed = true;
            }
            if (!placed)
                throw Error(ErrorKind::ConstructionFailed, "greedy_pairs ran out of candidates at i=" +
                                                               std::to_string(i) + ", j=" + std::to_string(j));
        }
    }
    const auto layer = middle_layer(n);
    for (const auto& v : layer)
        if (!used.count(v)) {
            ps.extra_ = v;
            break;
        }
    if (ps.extra_.dim() == 0) throw Error(ErrorKind::ConstructionFailed, "greedy_pairs found no extra vector");
    if (auto bad = ps.check()) throw Error(ErrorKind::ConstructionFailed, "greedy_pairs: " + *bad);
    return ps;
}

std::vector<bool> express_in_pairs(const LatticeVector& target, const PairSystem& ps)
{
    const std::size_t n = ps.n();
    const auto r = static_cast<std::int64_t>(ps.multiplicity());
    if (target.dim() != n) throw Error(ErrorKind::InvalidDimension, "express_in_pairs: target dimension mismatch");
    if (!lattice_member(target))
        throw Error(ErrorKind::NotExpressible, target.to_string() + " is not in the middle-layer lattice");

    const auto vs = ps.vectors();
    LatticeVector total(n);
    for (const auto& v : vs) total += v;
    // Doubled offset from the center: y = 2 (target - g(U)).
    const LatticeVector y = 2 * target - total;
    if (y.norm_inf() > 2 * r)
        throw Error(ErrorKind::NotExpressible, "||target - g(U)||_inf = " + Rational(y.norm_inf(), 2).to_string() +
                                                   " exceeds R = " + std::to_string(r));

    const auto& w = ps.extra();
    std::string why = "no choice of sign on the extra vector gives a_i = R (mod 2)";
    for (int s : {1, -1}) {
        std::vector<std::int64_t> a(n, 0);
        bool ok = true;
        std::int64_t first = s * w[0];
        for (std::size_t k = 1; k < n && ok; ++k) {
            const std::int64_t d = s * w[k] - y[k];
            if (d % 2 != 0 || (d / 2 - r) % 2 != 0) {
                ok = false;
                break;
            }
            a[k] = d / 2;
            if (a[k] > r || a[k] < -r) {
                why = "a_" + std::to_string(k + 1) + " = " + std::to_string(a[k]) + " exceeds R";
                ok = false;
            }
            first += 2 * a[k];
        }
        if (!ok) continue;
        if (first != y[0]) {
            why = "first coordinate inconsistent";
            continue;
        }
        std::vector<bool> subset(vs.size(), false);
        for (std::size_t i = 2; i <= n; ++i) {
            const auto pos = static_cast<std::size_t>((r + a[i - 1]) / 2);
            for (std::size_t j = 1; j <= ps.multiplicity(); ++j) {
                const std::size_t base = 2 * ((i - 2) * ps.multiplicity() + (j - 1));
                subset[base + (j <= pos ? 0 : 1)] = true;
            }
        }
        subset.back() = s > 0;
        LatticeVector got(n);
        for (std::size_t k = 0; k < vs.size(); ++k)
            if (subset[k]) got += vs[k];
        if (got != target)
            throw Error(ErrorKind::ConstructionFailed, "express_in_pairs reproduced " + got.to_string() +
                                                           " instead of " + target.to_string());
        return subset;
    }
    throw Error(ErrorKind::NotExpressible, why);
}

LatticeVector rotate(const LatticeVector& v)
{
    const std::size_t n = v.dim();
    LatticeVector out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = v[(i + 1) % n];
    return out;
}

std::vector<Orbit> orbit_decompose(std::size_t n)
{
    require_even(n, "orbit_decompose");
    std::vector<Orbit> orbits;
    VectorSet seen;
    for (const auto& v : signed_middle_layer(n)) {
        if (seen.count(v)) continue;
        Orbit o;
        o.representative = v;
        LatticeVector u = v;
        do {
            o.members.push_back(u);
            seen.insert(u);
            u = rotate(u);
        } while (u != v);
        const auto neg = -v;
        o.self_negating = std::find(o.members.begin(), o.members.end(), neg) != o.members.end();
        orbits.push_back(std::move(o));
    }
    return orbits;
}

namespace {

class SignSearch {
public:
    SignSearch(std::vector<LatticeVector> reps, LatticeVector target, std::size_t budget)
        : reps_(std::move(reps)), target_(std::move(target)), n_(target_.dim()), budget_(budget)
    {
        const std::size_t k = reps_.size();
        spread_.assign(k + 1, LatticeVector(n_));
        parity_.assign(k + 1, LatticeVector(n_));
        for (std::size_t i = k; i-- > 0;) {
            spread_[i] = spread_[i + 1];
            parity_[i] = parity_[i + 1];
            for (std::size_t c = 0; c < n_; ++c) {
                const auto x = reps_[i][c];
                spread_[i][c] += 2 * (x < 0 ? -x : x);
                parity_[i][c] += 2 * x;
            }
        }
        signs_.assign(k, 1);
    }

    enum class Result { Found, Exhausted, OverBudget };

    Result run()
    {
        LatticeVector partial(n_);
        return descend(0, partial);
    }

    const std::vector<int>& signs() const { return signs_; }

    // Meet in the middle: tabulate the second half, then scan the first.
    std::optional<std::vector<int>> split()
    {
        const std::size_t k = reps_.size();
        const std::size_t h = k / 2, rest = k - h;
        if (rest > 24) throw Error(ErrorKind::SizeLimit, "sign search too large for meet-in-the-middle");
        std::unordered_map<LatticeVector, std::uint64_t, LatticeVectorHash> table;
        const auto half_sum = [&](std::size_t from, std::size_t len, std::uint64_t mask) {
            LatticeVector s(n_);
            for (std::size_t b = 0; b < len; ++b) {
                const std::int64_t e = (mask >> b) & 1U ? -2 : 2;
                s += e * reps_[from + b];
            }
            return s;
        };
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << rest); ++m) table.emplace(half_sum(h, rest, m), m);
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << h); ++m) {
            auto it = table.find(target_ - half_sum(0, h, m));
            if (it == table.end()) continue;
            std::vector<int> out(k);
            for (std::size_t b = 0; b < h; ++b) out[b] = (m >> b) & 1U ? -1 : 1;
            for (std::size_t b = 0; b < rest; ++b) out[h + b] = (it->second >> b) & 1U ? -1 : 1;
            return out;
        }
        return std::nullopt;
    }

private:
    bool feasible(std::size_t depth, const LatticeVector& partial) const
    {
        for (std::size_t c = 0; c < n_; ++c) {
            const auto gap = target_[c] - partial[c];
            if ((gap < 0 ? -gap : gap) > spread_[depth][c]) return false;
            if (((gap - parity_[depth][c]) % 4 + 4) % 4 != 0) return false;
        }
        return true;
    }

    Result descend(std::size_t depth, LatticeVector& partial)
    {
        if (++nodes_ > budget_) return Result::OverBudget;
        if (!feasible(depth, partial)) return Result::Exhausted;
        if (depth == reps_.size()) return Result::Found;
        for (int s : {1, -1}) {
            const LatticeVector step = (2 * s) * reps_[depth];
            partial += step;
            signs_[depth] = s;
            const auto r = descend(depth + 1, partial);
            partial -= step;
            if (r != Result::Exhausted) return r;
        }
        return Result::Exhausted;
    }

    std::vector<LatticeVector> reps_;
    LatticeVector target_;
    std::size_t n_;
    std::size_t budget_;
    std::size_t nodes_ = 0;
    std::vector<LatticeVector> spread_;
    std::vector<LatticeVector> parity_;
    std::vector<int> signs_;
};

} // namespace

std::vector<int> search_signs(std::span<const LatticeVector> vs, const LatticeVector& target, std::size_t node_budget)
{
    const std::size_t n = target.dim();
    std::unordered_map<LatticeVector, std::size_t, LatticeVectorHash> index;
    for (std::size_t k = 0; k < vs.size(); ++k) {
        if (vs[k].dim() != n) throw Error(ErrorKind::InvalidDimension, "search_signs: dimension mismatch");
        if (!index.emplace(vs[k], k).second) throw Error(ErrorKind::InvalidArgument, "search_signs: repeated vector");
    }
    std::vector<LatticeVector> reps;
    std::vector<std::size_t> rep_of(vs.size(), SIZE_MAX);
    for (std::size_t k = 0; k < vs.size(); ++k) {
        const auto neg = index.find(-vs[k]);
        if (neg == index.end())
            throw Error(ErrorKind::InvalidArgument, "search_signs: " + vs[k].to_string() + " has no negation in the set");
        if (rep_of[k] != SIZE_MAX) continue;
        rep_of[k] = reps.size();
        rep_of[neg->second] = reps.size();
        reps.push_back(vs[k]);
    }

    SignSearch search(reps, target, node_budget);
    std::vector<int> rep_signs;
    switch (search.run()) {
    case SignSearch::Result::Found: rep_signs = search.signs(); break;
    case SignSearch::Result::Exhausted: throw Error(ErrorKind::Unsatisfiable, "no antisymmetric signs reach " + target.to_string());
    case SignSearch::Result::OverBudget: {
        auto found = search.split();
        if (!found) throw Error(ErrorKind::Unsatisfiable, "no antisymmetric signs reach " + target.to_string());
        rep_signs = std::move(*found);
        break;
    }
    }

    std::vector<int> out(vs.size());
    for (std::size_t k = 0; k < vs.size(); ++k) {
        const auto& rep = reps[rep_of[k]];
        out[k] = rep == vs[k] ? rep_signs[rep_of[k]] : -rep_signs[rep_of[k]];
    }
    LatticeVector check(n);
    for (std::size_t k = 0; k < vs.size(); ++k) check += out[k] * vs[k];
    if (check != target) throw Error(ErrorKind::ConstructionFailed, "search_signs produced " + check.to_string());
    return out;
}

std::string_view to_string(BalanceMethod m)
{
    return m == BalanceMethod::Orbits ? "orbits" : "pair-pipeline";
}

std::vector<std::size_t> MiddleBalance::plus_three_positions() const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < defect.dim(); ++i)
        if (defect[i] == 3) out.push_back(i + 1);
    return out;
}

LatticeVector target_defect(std::size_t n)
{
    require_even(n, "target_defect");
    LatticeVector w(n);
    if (!is_power_of_two(static_cast<std::int64_t>(n))) return w;
    if (n == 2) return LatticeVector{-1, 1};
    // The printed small tables put +3 at i = 1 (mod 4); the pair pipeline at i = 0 (mod 4).
    const std::size_t hot = n < 16 ? 1 : 0;
    for (std::size_t i = 1; i <= n; ++i) w[i - 1] = i % 4 == hot ? 3 : -1;
    return w;
}

namespace {

std::vector<int> orbit_signs(std::size_t n, const VectorFamily& layer, const LatticeVector& defect)
{
    std::unordered_map<LatticeVector, int, LatticeVectorHash> eps;
    std::vector<LatticeVector> self_neg;
    for (const auto& o : orbit_decompose(n)) {
        if (o.self_negating) {
            self_neg.insert(self_neg.end(), o.members.begin(), o.members.end());
            continue;
        }
        if (eps.count(o.representative)) continue;
        for (const auto& v : o.members) {
            eps[v] = 1;
            eps[-v] = -1;
        }
    }
    const auto signs = search_signs(self_neg, 2 * defect);
    for (std::size_t k = 0; k < self_neg.size(); ++k) eps[self_neg[k]] = signs[k];
    std::vector<int> out;
    out.reserve(layer.size());
    for (const auto& v : layer) out.push_back(eps.at(v));
    return out;
}

} // namespace

MiddleBalance balance_middle(std::size_t n)
{
    require_even(n, "balance_middle");
    MiddleBalance b;
    b.n = n;
    b.layer = std::make_shared<const VectorFamily>(middle_layer(n));
    b.defect = target_defect(n);
    const bool pow2 = is_power_of_two(static_cast<std::int64_t>(n));
    const auto& layer = *b.layer;

    if ((pow2 && n < 16) || (!pow2 && n < 14)) {
        b.method = BalanceMethod::Orbits;
        b.signs = orbit_signs(n, layer, b.defect);
    } else {
        b.method = BalanceMethod::PairPipeline;
        const std::size_t r = pow2 ? n / 2 + 2 : n / 2;
        b.pairs = greedy_pairs(n, r);
        const auto u = b.pairs->vectors();
        std::unordered_map<LatticeVector, std::size_t, LatticeVectorHash> in_u;
        for (std::size_t k = 0; k < u.size(); ++k) in_u.emplace(sign_canonical(u[k]), k);

        std::vector<std::size_t> rest_idx;
        std::vector<LatticeVector> rest;
        for (std::size_t k = 0; k < layer.size(); ++k)
            if (!in_u.count(layer[k])) {
                rest_idx.push_back(k);
                rest.push_back(layer[k]);
            }
        b.coloring = partial_color(rest);

        LatticeVector total(n);
        for (const auto& v : u) total += v;
        const LatticeVector doubled = total + b.defect - b.coloring->sum;
        LatticeVector target(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (doubled[i] % 2 != 0) throw Error(ErrorKind::ConstructionFailed, "pipeline target is not integral");
            target[i] = doubled[i] / 2;
        }
        const auto subset = express_in_pairs(target, *b.pairs);

        b.signs.assign(layer.size(), 0);
        for (std::size_t k = 0; k < rest_idx.size(); ++k) b.signs[rest_idx[k]] = b.coloring->signs[k];
        for (std::size_t k = 0; k < layer.size(); ++k) {
            auto it = in_u.find(layer[k]);
            if (it == in_u.end()) continue;
            const int e = subset[it->second] ? 1 : -1;
            b.signs[k] = u[it->second] == layer[k] ? e : -e;
        }
    }

    LatticeVector sum(n);
    for (std::size_t k = 0; k < layer.size(); ++k) sum += b.signs[k] * layer[k];
    if (sum != b.defect)
        throw Error(ErrorKind::ConstructionFailed, "middle-layer signs sum to " + sum.to_string() + ", expected " +
                                                       b.defect.to_string());
    return b;
}

ChooserPlan chooser_translate(std::size_t n)
{
    if (n < 2) throw Error(ErrorKind::InvalidDimension, "chooser_translate needs n >= 2");
    ChooserPlan p;
    p.n = n;
    p.bound = critical_M(static_cast<std::int64_t>(n)).m_crit_int;
    std::int64_t c = 0;
    if (n % 2 == 1) {
        auto a = odd_signs(n);
        p.family = a.family;
        p.signs = std::move(a.signs);
        p.defect = LatticeVector(n);
        c = binomial(static_cast<std::int64_t>(n - 1), static_cast<std::int64_t>((n - 1) / 2));
    } else {
        p.family = std::make_shared<const VectorFamily>(canonical_family(n));
        const auto mid = balance_middle(n);
        std::unordered_map<LatticeVector, int, LatticeVectorHash> mid_sign;
        for (std::size_t k = 0; k < mid.layer->size(); ++k) mid_sign.emplace((*mid.layer)[k], mid.signs[k]);
        c = binomial(static_cast<std::int64_t>(n - 1), static_cast<std::int64_t>(n / 2));
        LatticeVector off(n);
        p.signs.reserve(p.family->size());
        for (const auto& v : *p.family) {
            const auto s = v.coord_sum();
            const int e = s > 0 ? 1 : s < 0 ? -1 : mid_sign.at(v);
            if (s != 0) off += e * v;
            p.signs.push_back(e);
        }
        if (off != c * LatticeVector::ones(n))
            throw Error(ErrorKind::ConstructionFailed, "off-middle signs do not sum to C(n-1,n/2) * 1");
        p.defect = mid.defect;
    }
    const auto& f = *p.family;
    LatticeVector signed_sum(n);
    for (std::size_t k = 0; k < f.size(); ++k) signed_sum += p.signs[k] * f[k];
    if (signed_sum != c * LatticeVector::ones(n) + p.defect)
        throw Error(ErrorKind::ConstructionFailed, "signed sum " + signed_sum.to_string() + " is off");

    // t = -g(V) - C/2 * 1 + w/2 with w = -defect.
    p.translate = RationalVector(n);
    const auto g = center(f);
    for (std::size_t i = 0; i < n; ++i) p.translate[i] = -g[i] - Rational(c, 2) - Rational(p.defect[i], 2);

    p.subset.resize(f.size());
    RationalVector at = p.translate;
    for (std::size_t k = 0; k < f.size(); ++k) {
        p.subset[k] = p.signs[k] > 0;
        if (p.subset[k]) at = at + to_rational(f[k]);
    }
    for (const auto& x : at)
        if (x != Rational(0)) throw Error(ErrorKind::ConstructionFailed, "t + sum(S0) = " + to_string(at) + " is not 0");

    p.max_coords = p.translate;
    for (const auto& v : f)
        for (std::size_t i = 0; i < n; ++i)
            if (v[i] > 0) p.max_coords[i] += Rational(v[i]);
    for (std::size_t i = 0; i < n; ++i)
        if (p.max_coords[i] > Rational(p.bound))
            throw Error(ErrorKind::ConstructionFailed, "coordinate " + std::to_string(i + 1) + " reaches " +
                                                           p.max_coords[i].to_string() + " > M = " +
                                                           std::to_string(p.bound));
    return p;
}

LatticeVector SignTable::sum() const
{
    LatticeVector s(n);
    for (const auto& [e, v] : rows) s += e * v;
    return s;
}

bool SignTable::antisymmetric() const
{
    std::unordered_map<LatticeVector, int, LatticeVectorHash> m;
    for (const auto& [e, v] : rows)
        if (!m.emplace(v, e).second) return false;
    for (const auto& [v, e] : m) {
        auto it = m.find(-v);
        if (it == m.end() || it->second != -e) return false;
    }
    return true;
}

SignTable read_sign_table(std::istream& in)
{
    SignTable t;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream ls(line.substr(start));
        std::string sign, bits;
        if (!(ls >> sign >> bits) || (sign != "+" && sign != "-"))
            throw Error(ErrorKind::Parse, "sign table line " + std::to_string(lineno) + ": expected '+ bits' or '- bits'");
        auto v = LatticeVector::from_binary(bits);
        if (t.n == 0) t.n = v.dim();
        else if (v.dim() != t.n)
            throw Error(ErrorKind::Parse, "sign table line " + std::to_string(lineno) + ": length differs");
        t.rows.emplace_back(sign == "+" ? 1 : -1, std::move(v));
    }
    return t;
}

void write_sign_table(std::ostream& out, const SignTable& t)
{
    for (const auto& [e, v] : t.rows) out << (e > 0 ? '+' : '-') << ' ' << v.to_binary() << '\n';
}

std::vector<std::size_t> reference_sign_table_sizes() { return {4, 6, 8, 10, 12}; }

SignTable reference_sign_table(std::size_t n)
{
    const auto text = detail::reference_sign_table_text(n);
    if (text.empty()) throw Error(ErrorKind::InvalidArgument, "no bundled sign table for n = " + std::to_string(n));
    std::istringstream in{std::string(text)};
    return read_sign_table(in);
}

LatticeVector reference_table_target(std::size_t n) { return 2 * target_defect(n); }

SignTable to_sign_table(const MiddleBalance& b)
{
    std::unordered_map<LatticeVector, int, LatticeVectorHash> eps;
    for (std::size_t k = 0; k < b.layer->size(); ++k) {
        eps[(*b.layer)[k]] = b.signs[k];
        eps[-(*b.layer)[k]] = -b.signs[k];
    }
    SignTable t;
    t.n = b.n;
    for (const auto& v : signed_middle_layer(b.n)) t.rows.emplace_back(eps.at(v), v);
    return t;
}

} // namespace balgame
