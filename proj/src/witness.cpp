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

#include "balgame/witness.hpp"

#include <algorithm>
#include <random>

#include "balgame/error.hpp"
#include "balgame/game.hpp"
#include "exact_lp.hpp"

namespace balgame {

namespace {

using Point2 = std::pair<std::int64_t, std::int64_t>;

__int128 cross(const Point2& o, const Point2& a, const Point2& b)
{
    return static_cast<__int128>(a.first - o.first) * (b.second - o.second) -
           static_cast<__int128>(a.second - o.second) * (b.first - o.first);
}

// Strict convex hull (no collinear points), counter-clockwise.
std::vector<Point2> hull2(std::vector<Point2> pts)
{
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) return pts;
    std::vector<Point2> h(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
        h[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
        while (k >= lower && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

bool in_hull2(const std::vector<Point2>& h, const Point2& q)
{
    if (h.empty()) return false;
    if (h.size() == 1) return h[0] == q;
    if (h.size() == 2) {
        if (cross(h[0], h[1], q) != 0) return false;
        return std::min(h[0], h[1]) <= q && q <= std::max(h[0], h[1]);
    }
    for (std::size_t i = 0; i < h.size(); ++i)
        if (cross(h[i], h[(i + 1) % h.size()], q) < 0) return false;
    return true;
}

std::vector<Point2> to_plane(const std::vector<LatticeVector>& pts)
{
    std::vector<Point2> out;
    out.reserve(pts.size());
    for (const auto& p : pts) out.emplace_back(p[0], p[1]);
    return out;
}

} // namespace

bool in_convex_hull_lp(const std::vector<LatticeVector>& points, const LatticeVector& q)
{
    if (points.empty()) return false;
    const std::size_t n = q.dim();
    lp::Matrix a(n + 1, std::vector<mpq_class>(points.size()));
    std::vector<mpq_class> b(n + 1);
    for (std::size_t j = 0; j < points.size(); ++j) {
        for (std::size_t i = 0; i < n; ++i) a[i][j] = static_cast<long>(points[j][i]);
        a[n][j] = 1;
    }
    for (std::size_t i = 0; i < n; ++i) b[i] = static_cast<long>(q[i]);
    b[n] = 1;
    return lp::solve(a, b, std::vector<mpq_class>(points.size())).status == lp::Status::Optimal;
}

bool in_convex_hull(const std::vector<LatticeVector>& points, const LatticeVector& q)
{
    if (q.dim() == 2) {
        auto pts = to_plane(points);
        return in_hull2(hull2(std::move(pts)), {q[0], q[1]});
    }
    return in_convex_hull_lp(points, q);
}

std::vector<LatticeVector> extreme_points(const PointSet& t, std::size_t limit)
{
    if (t.size() > limit)
        throw Error(ErrorKind::SizeLimit, "set of " + std::to_string(t.size()) + " points exceeds limit " +
                                              std::to_string(limit));
    const auto pts = t.sorted();
    std::vector<LatticeVector> out;
    if (t.dim() == 2) {
        const auto h = hull2(to_plane(pts));
        for (const auto& p : pts)
            if (std::find(h.begin(), h.end(), Point2{p[0], p[1]}) != h.end()) out.push_back(p);
        return out;
    }
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::vector<LatticeVector> others;
        others.reserve(pts.size() - 1);
        for (std::size_t j = 0; j < pts.size(); ++j)
            if (j != i) others.push_back(pts[j]);
        if (!in_convex_hull_lp(others, pts[i])) out.push_back(pts[i]);
    }
    return out;
}

std::optional<ExposingNormal> exposed_normal(const PointSet& t, const LatticeVector& x)
{
    if (!t.contains(x)) throw Error(ErrorKind::PreconditionViolated, "point " + x.to_string() + " is not in the set");
    const std::size_t n = x.dim();
    std::vector<LatticeVector> others;
    for (const auto& y : t.sorted())
        if (y != x) others.push_back(y);
    if (others.empty()) return ExposingNormal{LatticeVector::unit(n, 0), Rational(1)};
    if (in_convex_hull(others, x))
        throw Error(ErrorKind::PreconditionViolated, "point " + x.to_string() + " is not an extreme point");

    // min ||x - sum lambda_y y||_1 over the simplex; its multipliers are the
    // max-margin normal in the unit box, and the optimum is that margin.
    const std::size_t m = others.size();
    lp::Matrix a(n + 1, std::vector<mpq_class>(m + 2 * n));
    std::vector<mpq_class> b(n + 1), c(m + 2 * n);
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t i = 0; i < n; ++i) a[i][j] = static_cast<long>(x[i] - others[j][i]);
        a[n][j] = 1;
    }
    for (std::size_t i = 0; i < n; ++i) {
        a[i][m + i] = -1;
        a[i][m + n + i] = 1;
        c[m + i] = 1;
        c[m + n + i] = 1;
    }
    b[n] = 1;
    const auto res = lp::solve(a, b, c);
    if (res.status != lp::Status::Optimal || res.value <= 0) return std::nullopt;

    RationalVector dir(n);
    for (std::size_t i = 0; i < n; ++i) {
        mpq_class v = -res.duals[i];
        v.canonicalize();
        dir[i] = Rational(v.get_num().get_si(), v.get_den().get_si());
    }
    mpq_class margin = res.value;
    margin.canonicalize();
    ExposingNormal out{scale_to_integer(dir), Rational(margin.get_num().get_si(), margin.get_den().get_si())};
    for (const auto& y : others)
        if (out.direction.dot(x - y) <= 0)
            throw Error(ErrorKind::ConstructionFailed, "LP multipliers do not expose " + x.to_string());
    return out;
}

LatticeVector admissible_normal(const PointSet& t, const LatticeVector& x, const LatticeVector& a,
                                const VectorFamily& f)
{
    std::vector<const LatticeVector*> flat;
    for (const auto& v : f)
        if (a.dot(v) == 0) flat.push_back(&v);
    if (flat.empty()) return a;

    const std::size_t n = x.dim();
    std::int64_t spread = 0;
    for (const auto& y : t) {
        std::int64_t d = 0;
        for (std::size_t i = 0; i < n; ++i) d = checked_add(d, std::abs(x[i] - y[i]));
        spread = std::max(spread, d);
    }
    for (const auto& v : f) {
        std::int64_t d = 0;
        for (auto c : v.coords()) d = checked_add(d, std::abs(c));
        spread = std::max(spread, d);
    }
    // p = (1, s, s^2, ...) is nonzero on each flat member for all but finitely many s.
    for (std::int64_t s = 1; s < 1'000'000; ++s) {
        LatticeVector p(n);
        std::int64_t pw = 1;
        for (std::size_t i = 0; i < n; ++i) {
            p[i] = pw;
            pw = checked_mul(pw, s);
        }
        if (!std::all_of(flat.begin(), flat.end(), [&](const LatticeVector* v) { return p.dot(*v) != 0; })) continue;
        // a.(x-y) >= 1 for integer a, so K beats every |p.(x-y)| and |p.v|.
        const std::int64_t k = checked_add(checked_mul(p.norm_inf(), spread), 1);
        auto out = k * a + p;
        for (const auto& y : t)
            if (y != x && out.dot(x - y) <= 0)
                throw Error(ErrorKind::ConstructionFailed, "perturbed normal no longer exposes " + x.to_string());
        for (const auto& v : f)
            if (out.dot(v) == 0) throw Error(ErrorKind::ConstructionFailed, "perturbed normal is still degenerate");
        return out;
    }
    throw Error(ErrorKind::DegenerateNormal, "no admissible perturbation found");
}

namespace {

void check_witness_inputs(const PointSet& t, const VectorFamily& f)
{
    if (!f.strict()) throw Error(ErrorKind::InvalidArgument, "witness family must have no parallel members");
    if (f.size() > kMaxWitnessFamilySize)
        throw Error(ErrorKind::SizeLimit, "witness family limited to " + std::to_string(kMaxWitnessFamilySize) +
                                              " members");
    if (t.size() > kDefaultWitnessSetLimit)
        throw Error(ErrorKind::SizeLimit, "witness set limited to " + std::to_string(kDefaultWitnessSetLimit) +
                                              " points");
    if (t.dim() != f.dim()) throw Error(ErrorKind::InvalidDimension, "set/family dimension mismatch");
}

std::vector<bool> containment_checks(const std::vector<LatticeVector>& hull_pts, const std::vector<LatticeVector>& psum,
                                     const LatticeVector& translate)
{
    std::vector<bool> checks;
    checks.reserve(psum.size());
    for (const auto& u : psum) checks.push_back(in_convex_hull(hull_pts, translate + u));
    return checks;
}

} // namespace

WitnessCertificate translate_witness(const PointSet& t, const VectorFamily& f, const LatticeVector& x)
{
    check_witness_inputs(t, f);
    if (auto bad = first_violation(t, f))
        throw Error(ErrorKind::NotVClosed, "set is not V-closed at " + bad->point.to_string() + " along " +
                                               f[bad->member].to_string());
    auto exposing = exposed_normal(t, x);
    if (!exposing) throw Error(ErrorKind::PreconditionViolated, "point " + x.to_string() + " is not exposed");

    WitnessCertificate cert;
    cert.family = f;
    cert.set = t;
    cert.x = x;
    cert.normal = admissible_normal(t, x, exposing->direction, f);
    cert.vertex = zonotope_vertex(f, cert.normal);
    cert.translate = x - cert.vertex;
    const auto pts = t.sorted();
    cert.checks = containment_checks(pts, enumerate_psum(f).sorted(), cert.translate);
    cert.verified = std::all_of(cert.checks.begin(), cert.checks.end(), [](bool b) { return b; });
    if (!cert.verified)
        throw Error(ErrorKind::TheoremContradiction, "translate " + cert.translate.to_string() + " + P(V) through " +
                                                         x.to_string() + " leaves conv T");
    return cert;
}

bool replay(const WitnessCertificate& cert)
{
    const auto& t = cert.set;
    const auto& f = cert.family;
    if (!t.contains(cert.x) || !is_vclosed(t, f)) return false;
    for (const auto& y : t)
        if (y != cert.x && cert.normal.dot(cert.x - y) <= 0) return false;
    for (const auto& v : f)
        if (cert.normal.dot(v) == 0) return false;
    if (zonotope_vertex(f, cert.normal) != cert.vertex || cert.x - cert.vertex != cert.translate) return false;
    const auto checks = containment_checks(t.sorted(), enumerate_psum(f).sorted(), cert.translate);
    return checks == cert.checks && std::all_of(checks.begin(), checks.end(), [](bool b) { return b; });
}

PointSet random_vclosed(const VectorFamily& f, std::uint64_t seed, std::size_t budget)
{
    if (!f.strict()) throw Error(ErrorKind::InvalidArgument, "generator needs a family without parallel members");
    std::mt19937_64 rng(seed);
    const auto psum = enumerate_psum(f, budget).sorted();
    const std::size_t n = f.dim();
    std::vector<std::int64_t> width(n);
    for (std::size_t i = 0; i < n; ++i) width[i] = std::max<std::int64_t>(1, family_width(f, i));
    auto uniform = [&](std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };

    PointSet candidates(n);
    const std::size_t copies = 1 + rng() % 3;
    std::vector<std::int64_t> lo(n, INT64_MAX), hi(n, INT64_MIN);
    for (std::size_t k = 0; k < copies; ++k) {
        LatticeVector s(n);
        for (std::size_t i = 0; i < n; ++i) s[i] = uniform(-width[i], width[i]);
        for (const auto& u : psum) {
            auto p = s + u;
            for (std::size_t i = 0; i < n; ++i) {
                lo[i] = std::min(lo[i], p[i]);
                hi[i] = std::max(hi[i], p[i]);
            }
            candidates.insert(p);
        }
    }
    if (candidates.size() > budget)
        throw Error(ErrorKind::SizeLimit, "union of translates exceeds budget " + std::to_string(budget));
    const std::size_t noise = std::min(budget - candidates.size(), candidates.size());
    for (std::size_t k = 0; k < noise; ++k) {
        LatticeVector p(n);
        for (std::size_t i = 0; i < n; ++i) p[i] = uniform(lo[i], hi[i]);
        candidates.insert(p);
    }
    auto out = maximal_vclosed_subset(candidates, f);
    out.origin = "random-vclosed seed " + std::to_string(seed);
    return out;
}

} // namespace balgame
