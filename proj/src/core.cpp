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

#include "balgame/core.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "balgame/error.hpp"

namespace balgame {

VectorFamily::VectorFamily(std::size_t dim, std::vector<LatticeVector> members, std::string label, bool strict)
    : dim_(dim), members_(std::move(members)), label_(std::move(label)), strict_(strict)
{
    if (dim_ == 0) throw Error(ErrorKind::InvalidDimension, "family dimension must be >= 1");
    std::unordered_set<LatticeVector, LatticeVectorHash> seen;
    for (std::size_t i = 0; i < members_.size(); ++i) {
        const auto& v = members_[i];
        if (v.dim() != dim_)
            throw Error(ErrorKind::InvalidDimension, "member " + std::to_string(i) + " has dimension " +
                                                         std::to_string(v.dim()) + ", expected " + std::to_string(dim_));
        if (v.is_zero()) throw Error(ErrorKind::InvalidArgument, "member " + std::to_string(i) + " is the zero vector");
        if (!seen.insert(v).second)
            throw Error(ErrorKind::InvalidArgument, "duplicate member " + v.to_string());
    }
    if (strict_) {
        for (std::size_t i = 0; i < members_.size(); ++i)
            for (std::size_t j = i + 1; j < members_.size(); ++j)
                if (parallel(members_[i], members_[j]))
                    throw Error(ErrorKind::InvalidArgument, "parallel members " + members_[i].to_string() + " and " +
                                                                members_[j].to_string());
    }
}

VectorFamily VectorFamily::unchecked(std::size_t dim, std::vector<LatticeVector> members, std::string label,
                                     bool strict)
{
    VectorFamily f;
    f.dim_ = dim;
    f.members_ = std::move(members);
    f.label_ = std::move(label);
    f.strict_ = strict;
    return f;
}

std::optional<std::size_t> VectorFamily::index_of(const LatticeVector& v) const
{
    auto it = std::find(members_.begin(), members_.end(), v);
    if (it == members_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - members_.begin());
}

PointSet::PointSet(std::size_t dim, const std::vector<LatticeVector>& points) : dim_(dim)
{
    for (const auto& p : points) insert(p);
}

bool PointSet::insert(const LatticeVector& p)
{
    if (p.dim() != dim_)
        throw Error(ErrorKind::InvalidDimension,
                    "point " + p.to_string() + " does not have dimension " + std::to_string(dim_));
    return points_.insert(p).second;
}

std::vector<LatticeVector> PointSet::sorted() const
{
    std::vector<LatticeVector> out(points_.begin(), points_.end());
    std::sort(out.begin(), out.end());
    return out;
}

PointSet PointSet::translated(const LatticeVector& t) const
{
    PointSet out(dim_);
    for (const auto& p : points_) out.insert(p + t);
    out.origin = origin;
    return out;
}

VectorFamily canonical_family(std::size_t n)
{
    if (n == 0) throw Error(ErrorKind::InvalidDimension, "canonical family needs n >= 1");
    if (n > kMaxCanonicalDim)
        throw Error(ErrorKind::Range, "canonical family limited to n <= " + std::to_string(kMaxCanonicalDim));
    const std::uint64_t count = std::uint64_t{1} << (n - 1);
    std::vector<LatticeVector> members;
    members.reserve(count);
    // Pattern k (descending) encodes coordinates 2..n, most significant bit first; a set bit is +1.
    for (std::uint64_t step = 0; step < count; ++step) {
        const std::uint64_t k = count - 1 - step;
        LatticeVector v(n);
        v[0] = 1;
        for (std::size_t i = 1; i < n; ++i) v[i] = ((k >> (n - 1 - i)) & 1) ? 1 : -1;
        members.push_back(std::move(v));
    }
    // Distinct +-1 vectors sharing v_1 = 1 are never parallel; skip the quadratic check.
    return VectorFamily::unchecked(n, std::move(members), "canonical-" + std::to_string(n), true);
}

LatticeVector family_sum(const VectorFamily& f)
{
    LatticeVector s(f.dim());
    for (const auto& v : f) s += v;
    return s;
}

RationalVector center(const VectorFamily& f) { return half(family_sum(f)); }

PointSet enumerate_psum(const VectorFamily& f, std::size_t cap)
{
    PointSet sums(f.dim());
    sums.insert(LatticeVector(f.dim()));
    std::vector<LatticeVector> frontier{LatticeVector(f.dim())};
    for (std::size_t k = 0; k < f.size(); ++k) {
        const auto& v = f[k];
        const std::size_t before = frontier.size();
        for (std::size_t j = 0; j < before; ++j) {
            auto p = frontier[j] + v;
            if (sums.insert(p)) {
                frontier.push_back(std::move(p));
                if (sums.size() > cap)
                    throw Error(ErrorKind::SizeLimit, "subset-sum set exceeded cap " + std::to_string(cap) +
                                                          " while adding member index " + std::to_string(k));
            }
        }
    }
    sums.origin = "P(" + (f.label().empty() ? std::string("family") : f.label()) + ")";
    return sums;
}

LatticeVector zonotope_vertex(const VectorFamily& f, const LatticeVector& a)
{
    if (a.dim() != f.dim()) throw Error(ErrorKind::InvalidDimension, "normal has wrong dimension");
    LatticeVector p(f.dim());
    std::string degenerate;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const auto d = a.dot(f[i]);
        if (d == 0) degenerate += (degenerate.empty() ? "" : " ") + f[i].to_string();
        else if (d > 0) p += f[i];
    }
    if (!degenerate.empty())
        throw Error(ErrorKind::DegenerateNormal, "normal " + a.to_string() + " is orthogonal to: " + degenerate);
    return p;
}

LatticeVector zonotope_vertex(const VectorFamily& f, const RationalVector& a)
{
    return zonotope_vertex(f, scale_to_integer(a));
}

std::int64_t family_width(const VectorFamily& f, std::size_t i)
{
    if (i >= f.dim()) throw Error(ErrorKind::InvalidDimension, "coordinate index out of range");
    std::int64_t w = 0;
    for (const auto& v : f) w = checked_add(w, v[i] < 0 ? -v[i] : v[i]);
    return w;
}

bool lattice_member(const LatticeVector& u)
{
    if (u.dim() < 2 || u.dim() % 2 != 0)
        throw Error(ErrorKind::InvalidDimension, "the middle-layer lattice needs even n >= 2");
    if (u.coord_sum() != 0) return false;
    const auto parity = u[0] & 1;
    for (auto x : u.coords())
        if ((x & 1) != parity) return false;
    return true;
}

static std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

VectorFamily read_family(std::istream& in, std::string label, bool strict)
{
    std::string line;
    std::size_t dim = 0;
    std::size_t lineno = 0;
    std::vector<LatticeVector> members;
    while (std::getline(in, line)) {
        ++lineno;
        auto text = trim(line);
        if (text.empty() || text.front() == '#') continue;
        if (dim == 0) {
            std::istringstream header{std::string(text)};
            std::string key;
            long long n = 0;
            if (!(header >> key >> n) || key != "dim" || n <= 0)
                throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": expected 'dim n' header");
            dim = static_cast<std::size_t>(n);
            continue;
        }
        const bool binary = text.find(',') == std::string_view::npos && text.size() == dim &&
                            text.find_first_not_of("01") == std::string_view::npos;
        auto v = binary ? LatticeVector::from_binary(text) : LatticeVector::parse(text);
        if (v.dim() != dim)
            throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": vector has dimension " +
                                              std::to_string(v.dim()) + ", expected " + std::to_string(dim));
        members.push_back(std::move(v));
    }
    if (dim == 0) throw Error(ErrorKind::Parse, "missing 'dim n' header");
    return VectorFamily(dim, std::move(members), std::move(label), strict);
}

void write_family(std::ostream& out, const VectorFamily& f, bool binary)
{
    out << "dim " << f.dim() << '\n';
    for (const auto& v : f) out << (binary ? v.to_binary() : v.to_string()) << '\n';
}

PointSet read_point_set(std::istream& in)
{
    std::string line;
    std::vector<LatticeVector> points;
    std::size_t dim = 0;
    while (std::getline(in, line)) {
        auto text = trim(line);
        if (text.empty()) continue;
        if (text.front() == '#') {
            std::istringstream header{std::string(text.substr(1))};
            std::string key;
            std::size_t n = 0;
            if (header >> key >> n && key == "dim") dim = n;
            continue;
        }
        points.push_back(LatticeVector::parse(text));
        if (dim == 0) dim = points.back().dim();
    }
    if (dim == 0) throw Error(ErrorKind::Parse, "point set has no points and no '# dim n' header");
    return PointSet(dim, points);
}

void write_point_set(std::ostream& out, const PointSet& s)
{
    out << "# dim " << s.dim() << '\n';
    for (const auto& p : s.sorted()) out << p.to_string() << '\n';
}

} // namespace balgame
