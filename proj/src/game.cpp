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

#include "balgame/game.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "balgame/error.hpp"

namespace balgame {

bool GameRegion::contains(const LatticeVector& z) const
{
    if (z.dim() != dim()) throw Error(ErrorKind::InvalidDimension, "position/region dimension mismatch");
    for (std::size_t i = 0; i < dim(); ++i)
        if (z[i] > upper[i]) return false;
    return true;
}

std::vector<std::int64_t> GameRegion::slack(const LatticeVector& z) const
{
    std::vector<std::int64_t> s(dim());
    for (std::size_t i = 0; i < dim(); ++i) s[i] = checked_sub(upper[i], z[i]);
    return s;
}

// ---- Window --------------------------------------------------------------

Window::Window(std::vector<std::int64_t> lo_, std::vector<std::int64_t> hi_) : lo(std::move(lo_)), hi(std::move(hi_))
{
    if (lo.size() != hi.size() || lo.empty()) throw Error(ErrorKind::InvalidDimension, "window bounds mismatch");
    for (std::size_t i = 0; i < lo.size(); ++i)
        if (lo[i] > hi[i])
            throw Error(ErrorKind::InvalidArgument, "window interval " + std::to_string(i) + " is empty");
}

Window Window::cube(std::size_t n, std::int64_t lo, std::int64_t hi)
{
    return Window(std::vector<std::int64_t>(n, lo), std::vector<std::int64_t>(n, hi));
}

Window Window::parse(const std::string& spec, std::size_t dim)
{
    std::vector<std::int64_t> lo, hi;
    std::stringstream ss(spec);
    std::string part;
    while (std::getline(ss, part, ',')) {
        auto colon = part.find(':');
        if (colon == std::string::npos) throw Error(ErrorKind::Parse, "window interval '" + part + "' needs lo:hi");
        try {
            lo.push_back(std::stoll(part.substr(0, colon)));
            hi.push_back(std::stoll(part.substr(colon + 1)));
        } catch (const std::logic_error&) {
            throw Error(ErrorKind::Parse, "bad window interval '" + part + "'");
        }
    }
    if (lo.size() == 1 && dim > 1) return cube(dim, lo[0], hi[0]);
    if (lo.size() != dim)
        throw Error(ErrorKind::InvalidDimension,
                    "window has " + std::to_string(lo.size()) + " intervals, family dimension is " + std::to_string(dim));
    return Window(std::move(lo), std::move(hi));
}

std::size_t Window::volume(std::size_t limit) const
{
    std::size_t v = 1;
    for (std::size_t i = 0; i < dim(); ++i) {
        const auto len = static_cast<std::size_t>(hi[i] - lo[i] + 1);
        if (len != 0 && v > limit / len)
            throw Error(ErrorKind::SizeLimit, "window " + to_string() + " exceeds volume limit " + std::to_string(limit));
        v *= len;
    }
    if (v > limit)
        throw Error(ErrorKind::SizeLimit, "window " + to_string() + " exceeds volume limit " + std::to_string(limit));
    return v;
}

bool Window::contains(const LatticeVector& z) const
{
    if (z.dim() != dim()) throw Error(ErrorKind::InvalidDimension, "point/window dimension mismatch");
    for (std::size_t i = 0; i < dim(); ++i)
        if (z[i] < lo[i] || z[i] > hi[i]) return false;
    return true;
}

// Last coordinate varies fastest, so index order is lexicographic order.
std::size_t Window::index(const LatticeVector& z) const
{
    std::size_t idx = 0;
    for (std::size_t i = 0; i < dim(); ++i)
        idx = idx * static_cast<std::size_t>(hi[i] - lo[i] + 1) + static_cast<std::size_t>(z[i] - lo[i]);
    return idx;
}

LatticeVector Window::point(std::size_t index) const
{
    LatticeVector z(dim());
    for (std::size_t k = dim(); k-- > 0;) {
        const auto len = static_cast<std::size_t>(hi[k] - lo[k] + 1);
        z[k] = lo[k] + static_cast<std::int64_t>(index % len);
        index /= len;
    }
    return z;
}

std::string Window::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (i) out += ',';
        out += std::to_string(lo[i]) + ":" + std::to_string(hi[i]);
    }
    return out;
}

// ---- V-closedness ----------------------------------------------------------

std::optional<Violation> first_violation(const PointSet& t, const VectorFamily& f)
{
    if (!t.empty() && t.dim() != f.dim()) throw Error(ErrorKind::InvalidDimension, "set/family dimension mismatch");
    for (const auto& z : t.sorted())
        for (std::size_t m = 0; m < f.size(); ++m)
            if (!t.contains(z + f[m]) && !t.contains(z - f[m])) return Violation{z, m};
    return std::nullopt;
}

namespace {

// Neighbour z + sign * v inside the window, as an index.
std::optional<std::size_t> neighbour(const Window& w, const LatticeVector& z, const LatticeVector& v, int sign)
{
    std::size_t idx = 0;
    for (std::size_t i = 0; i < w.dim(); ++i) {
        const auto c = z[i] + sign * v[i];
        if (c < w.lo[i] || c > w.hi[i]) return std::nullopt;
        idx = idx * static_cast<std::size_t>(w.hi[i] - w.lo[i] + 1) + static_cast<std::size_t>(c - w.lo[i]);
    }
    return idx;
}

} // namespace

SafeSetCertificate maximal_vclosed_subset(const Window& w, const VectorFamily& f, std::size_t volume_limit)
{
    if (w.dim() != f.dim()) throw Error(ErrorKind::InvalidDimension, "window/family dimension mismatch");
    const std::size_t volume = w.volume(volume_limit);

    SafeSetCertificate cert;
    cert.window_ = w;
    cert.family_ = f;
    cert.rank_.assign(volume, 0);
    cert.witness_.assign(volume, 0);

    auto alive = [&](std::optional<std::size_t> idx) { return idx && cert.rank_[*idx] == 0; };
    // Lowest member with both neighbours dead, judged against the state before this round.
    auto doomed_by = [&](std::size_t idx) -> std::optional<std::size_t> {
        const auto z = w.point(idx);
        for (std::size_t m = 0; m < f.size(); ++m)
            if (!alive(neighbour(w, z, f[m], +1)) && !alive(neighbour(w, z, f[m], -1))) return m;
        return std::nullopt;
    };

    std::vector<std::size_t> candidates(volume);
    for (std::size_t i = 0; i < volume; ++i) candidates[i] = i;

    std::uint32_t round = 0;
    std::vector<std::pair<std::size_t, std::size_t>> deletions;
    while (!candidates.empty()) {
        ++round;
        deletions.clear();
        for (auto idx : candidates) {
            if (cert.rank_[idx] != 0) continue;
            if (auto m = doomed_by(idx)) deletions.emplace_back(idx, *m);
        }
        if (deletions.empty()) break;
        for (auto [idx, m] : deletions) {
            cert.rank_[idx] = round;
            cert.witness_[idx] = static_cast<std::uint32_t>(m);
        }
        cert.rounds_ = round;
        candidates.clear();
        for (auto [idx, m] : deletions) {
            const auto z = w.point(idx);
            for (const auto& v : f)
                for (int sign : {+1, -1})
                    if (auto nb = neighbour(w, z, v, sign); alive(nb)) candidates.push_back(*nb);
        }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    }
    cert.safe_count_ = static_cast<std::size_t>(std::count(cert.rank_.begin(), cert.rank_.end(), 0u));
    return cert;
}

PointSet maximal_vclosed_subset(const PointSet& candidates, const VectorFamily& f)
{
    PointSet s = candidates;
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<LatticeVector> doomed;
        for (const auto& z : s.sorted())
            for (const auto& v : f)
                if (!s.contains(z + v) && !s.contains(z - v)) {
                    doomed.push_back(z);
                    break;
                }
        for (const auto& z : doomed) changed |= s.erase(z);
    }
    return s;
}

bool SafeSetCertificate::is_safe(const LatticeVector& z) const
{
    return window_.contains(z) && rank_[window_.index(z)] == 0;
}

std::optional<std::uint32_t> SafeSetCertificate::rank(const LatticeVector& z) const
{
    if (!window_.contains(z)) throw Error(ErrorKind::OutOfWindow, "point " + z.to_string() + " is outside the window");
    const auto r = rank_[window_.index(z)];
    if (r == 0) return std::nullopt;
    return r;
}

std::size_t SafeSetCertificate::witness(const LatticeVector& z) const
{
    if (!rank(z)) throw Error(ErrorKind::NoWinningMove, "point " + z.to_string() + " is in the safe set");
    return witness_[window_.index(z)];
}

PointSet SafeSetCertificate::safe_set() const
{
    PointSet s(window_.dim());
    for (std::size_t i = 0; i < rank_.size(); ++i)
        if (rank_[i] == 0) s.insert(window_.point(i));
    return s;
}

std::vector<LatticeVector> SafeSetCertificate::deleted_points() const
{
    std::vector<LatticeVector> out;
    for (std::size_t i = 0; i < rank_.size(); ++i)
        if (rank_[i] != 0) out.push_back(window_.point(i));
    return out;
}

std::optional<std::string> check_certificate(const SafeSetCertificate& cert)
{
    const auto& w = cert.window();
    const auto& f = cert.family();
    const std::size_t volume = w.volume();
    for (std::size_t i = 0; i < volume; ++i) {
        const auto z = w.point(i);
        auto rank_of = [&](const LatticeVector& y) -> std::optional<std::uint32_t> {
            if (!w.contains(y)) return std::nullopt;
            return cert.rank(y).value_or(0);
        };
        if (auto r = cert.rank(z)) {
            const auto& v = f[cert.witness(z)];
            for (const auto& y : {z + v, z - v}) {
                auto ry = rank_of(y);
                if (ry && (*ry == 0 || *ry >= *r))
                    return "deleted point " + z.to_string() + " (rank " + std::to_string(*r) +
                           ") has witness neighbour " + y.to_string() + " of rank " + std::to_string(*ry);
            }
        } else {
            for (std::size_t m = 0; m < f.size(); ++m) {
                auto a = rank_of(z + f[m]), b = rank_of(z - f[m]);
                if (!(a && *a == 0) && !(b && *b == 0))
                    return "safe point " + z.to_string() + " has no safe neighbour along " + f[m].to_string();
            }
        }
    }
    return std::nullopt;
}

bool is_canonical(const VectorFamily& f)
{
    const auto n = f.dim();
    if (n == 0 || n > kMaxCanonicalDim || f.size() != (std::size_t{1} << (n - 1))) return false;
    // Members are distinct, so 2^{n-1} distinct +-1 vectors with v_1 = 1 are all of them.
    return std::all_of(f.begin(), f.end(), [](const LatticeVector& v) {
        if (v[0] != 1) return false;
        return std::all_of(v.coords().begin(), v.coords().end(), [](std::int64_t x) { return x == 1 || x == -1; });
    });
}

std::int64_t default_window_margin(const VectorFamily& f)
{
    if (is_canonical(f)) return (std::int64_t{1} << f.dim()) + 2;
    std::int64_t width = 0;
    for (std::size_t i = 0; i < f.dim(); ++i) width = std::max(width, family_width(f, i));
    return width + 2;
}

VerdictResult verdict(const GameRegion& region, const VectorFamily& f, std::optional<std::int64_t> margin,
                      std::size_t volume_limit)
{
    if (region.dim() != f.dim()) throw Error(ErrorKind::InvalidDimension, "region/family dimension mismatch");
    const LatticeVector origin(f.dim());
    if (!region.contains(origin)) throw Error(ErrorKind::InvalidArgument, "region excludes the origin");

    VerdictResult result;
    result.region = region;
    result.canonical = is_canonical(f);
    result.margin = margin.value_or(default_window_margin(f));
    if (result.margin < 0) throw Error(ErrorKind::InvalidArgument, "window margin must be >= 0");

    std::vector<std::int64_t> lo(f.dim());
    for (std::size_t i = 0; i < f.dim(); ++i) lo[i] = checked_sub(region.upper[i], result.margin);
    result.certificate = maximal_vclosed_subset(Window(lo, region.upper), f, volume_limit);
    result.origin_rank = result.certificate.rank(origin);
    result.winner = result.origin_rank ? Winner::PusherWithinWindow : Winner::Chooser;
    return result;
}

// ---- engines ---------------------------------------------------------------

ChooserEngine::ChooserEngine(VectorFamily f, RationalVector t, std::vector<bool> subset)
    : family_(std::move(f)), t_(std::move(t)), subset_(std::move(subset))
{
    if (t_.size() != family_.dim()) throw Error(ErrorKind::InvalidDimension, "translate has wrong dimension");
    if (subset_.size() != family_.size()) throw Error(ErrorKind::InvalidArgument, "subset mask has wrong length");
}

int ChooserEngine::respond(std::size_t member)
{
    if (member >= family_.size())
        throw Error(ErrorKind::InvalidArgument, "member index " + std::to_string(member) + " not in family");
    const bool had = subset_[member];
    subset_[member] = !had;
    return had ? -1 : +1;
}

int ChooserEngine::respond(const LatticeVector& v)
{
    auto idx = family_.index_of(v);
    if (!idx) throw Error(ErrorKind::InvalidArgument, "offered vector " + v.to_string() + " is not in the family");
    return respond(*idx);
}

RationalVector ChooserEngine::position() const
{
    LatticeVector s(family_.dim());
    for (std::size_t i = 0; i < family_.size(); ++i)
        if (subset_[i]) s += family_[i];
    return t_ + to_rational(s);
}

PusherEngine::PusherEngine(SafeSetCertificate cert, GameRegion region) : cert_(std::move(cert)), region_(std::move(region))
{
    if (region_.dim() != cert_.family().dim())
        throw Error(ErrorKind::InvalidDimension, "region/certificate dimension mismatch");
}

std::optional<std::size_t> PusherEngine::offer(const LatticeVector& z) const
{
    if (!region_.contains(z)) return std::nullopt;
    if (!cert_.in_window(z))
        throw Error(ErrorKind::OutOfWindow, "position " + z.to_string() + " left the solved window " +
                                                cert_.window().to_string());
    if (cert_.is_safe(z))
        throw Error(ErrorKind::NoWinningMove, "position " + z.to_string() + " is in Chooser's safe set");
    return cert_.witness(z);
}

std::optional<int> GreedyChooser::choose(const LatticeVector& z, std::size_t member)
{
    const auto& v = family_[member];
    auto worst = [&](int sign) {
        std::int64_t m = INT64_MIN;
        for (std::size_t i = 0; i < z.dim(); ++i) m = std::max(m, z[i] + sign * v[i]);
        return m;
    };
    return worst(-1) < worst(+1) ? -1 : +1;
}

namespace {

void show_position(std::ostream& out, const GameRegion& region, const LatticeVector& z)
{
    out << "position " << z << "  slack";
    for (auto s : region.slack(z)) out << ' ' << s;
    out << '\n';
}

} // namespace

std::optional<int> HumanChooser::choose(const LatticeVector& z, std::size_t member)
{
    show_position(out_, region_, z);
    out_ << "offered v" << member << " = " << family_[member] << '\n';
    std::string line;
    while (true) {
        out_ << "sign [+/-]> " << std::flush;
        if (!std::getline(in_, line)) return std::nullopt;
        if (line == "+" || line == "+1" || line == "1") return +1;
        if (line == "-" || line == "-1") return -1;
        if (line == "q" || line == "quit") return std::nullopt;
        out_ << "enter + or - (q to quit)\n";
    }
}

std::optional<std::size_t> HumanPusher::offer(const LatticeVector& z)
{
    show_position(out_, region_, z);
    std::string line;
    while (true) {
        out_ << "offer member index 0.." << family_.size() - 1 << " or a vector> " << std::flush;
        if (!std::getline(in_, line)) return std::nullopt;
        if (line == "q" || line == "quit") return std::nullopt;
        try {
            if (line.find(',') != std::string::npos || line.size() == family_.dim()) {
                const bool binary = line.find(',') == std::string::npos;
                auto v = binary ? LatticeVector::from_binary(line) : LatticeVector::parse(line);
                if (auto idx = family_.index_of(v)) return *idx;
                if (auto idx = family_.index_of(-v)) return *idx;
            }
            std::size_t used = 0;
            const auto idx = std::stoull(line, &used);
            if (used == line.size() && idx < family_.size()) return static_cast<std::size_t>(idx);
        } catch (const std::exception&) {
        }
        out_ << "not a family member: '" << line << "'\n";
    }
}

std::string_view to_string(Outcome o)
{
    switch (o) {
    case Outcome::ChooserSurvived: return "chooser-survived";
    case Outcome::PusherEscaped: return "pusher-escaped";
    case Outcome::Aborted: return "aborted";
    }
    return "unknown";
}

Transcript simulate(const GameRegion& region, const VectorFamily& f, ChooserPolicy& chooser, PusherPolicy& pusher,
                    std::size_t rounds)
{
    if (region.dim() != f.dim()) throw Error(ErrorKind::InvalidDimension, "region/family dimension mismatch");
    Transcript tr;
    tr.region = region;
    tr.initial = LatticeVector(f.dim());
    LatticeVector z = tr.initial;
    if (!region.contains(z)) {
        tr.outcome = Outcome::PusherEscaped;
        return tr;
    }
    for (std::size_t k = 0; k < rounds; ++k) {
        std::optional<std::size_t> member;
        try {
            member = pusher.offer(z);
        } catch (const Error& e) {
            tr.outcome = Outcome::Aborted;
            tr.note = e.what();
            return tr;
        }
        if (!member) {
            tr.outcome = Outcome::Aborted;
            tr.note = "pusher stopped";
            return tr;
        }
        if (*member >= f.size()) throw Error(ErrorKind::InvalidArgument, "pusher offered a non-member");
        auto sign = chooser.choose(z, *member);
        if (!sign) {
            tr.outcome = Outcome::Aborted;
            tr.note = "chooser stopped";
            return tr;
        }
        if (*sign != 1 && *sign != -1) throw Error(ErrorKind::InvalidArgument, "chooser returned a non-sign");
        z = *sign > 0 ? z + f[*member] : z - f[*member];
        tr.rounds.push_back({*member, *sign, z});
        if (!region.contains(z)) {
            tr.outcome = Outcome::PusherEscaped;
            return tr;
        }
    }
    tr.outcome = Outcome::ChooserSurvived;
    return tr;
}

} // namespace balgame
