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

#ifndef BALGAME_CORE_HPP
#define BALGAME_CORE_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "balgame/lattice.hpp"

namespace balgame {

/// Largest dimension accepted by the canonical +-1 constructions.
inline constexpr std::size_t kMaxCanonicalDim = 24;

/// An ordered, duplicate-free list of nonzero lattice vectors.
///
/// A `strict` family additionally has no two parallel members. Construction
/// validates these invariants; the family is immutable afterwards.
class VectorFamily {
public:
    VectorFamily() = default;
    VectorFamily(std::size_t dim, std::vector<LatticeVector> members, std::string label = {}, bool strict = true);

    std::size_t dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    bool strict() const noexcept { return strict_; }
    const std::string& label() const noexcept { return label_; }
    const LatticeVector& operator[](std::size_t i) const { return members_[i]; }
    const std::vector<LatticeVector>& members() const noexcept { return members_; }
    auto begin() const noexcept { return members_.begin(); }
    auto end() const noexcept { return members_.end(); }

    /// Index of v in the family, if present.
    std::optional<std::size_t> index_of(const LatticeVector& v) const;

    /// Skips validation; for families that are valid by construction.
    static VectorFamily unchecked(std::size_t dim, std::vector<LatticeVector> members, std::string label, bool strict);

private:
    std::size_t dim_ = 0;
    std::vector<LatticeVector> members_;
    std::string label_;
    bool strict_ = false;
};

/// A finite set of lattice points of a common dimension.
class PointSet {
public:
    PointSet() = default;
    explicit PointSet(std::size_t dim) : dim_(dim) {}
    PointSet(std::size_t dim, const std::vector<LatticeVector>& points);

    std::size_t dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return points_.size(); }
    bool empty() const noexcept { return points_.empty(); }
    bool contains(const LatticeVector& p) const { return points_.count(p) != 0; }
    bool insert(const LatticeVector& p);
    bool erase(const LatticeVector& p) { return points_.erase(p) != 0; }

    /// Points in lexicographic order.
    std::vector<LatticeVector> sorted() const;
    PointSet translated(const LatticeVector& t) const;

    auto begin() const noexcept { return points_.begin(); }
    auto end() const noexcept { return points_.end(); }

    /// Free-form provenance, e.g. "P(V) of canonical-3".
    std::string origin;

private:
    std::size_t dim_ = 0;
    std::unordered_set<LatticeVector, LatticeVectorHash> points_;
};

/// All 2^{n-1} vectors with first coordinate +1 and the rest +-1.
/// Ordered with +1 before -1 in each later coordinate, so n=2 gives (1,1),(1,-1).
VectorFamily canonical_family(std::size_t n);

LatticeVector family_sum(const VectorFamily& f);
/// Half the family sum: the common center of P(V) and its zonotope.
RationalVector center(const VectorFamily& f);

inline constexpr std::size_t kDefaultPsumCap = 10'000'000;

/// Every distinct subset sum of f, built by set doubling.
/// Throws Error(SizeLimit) once the running set grows past `cap`.
PointSet enumerate_psum(const VectorFamily& f, std::size_t cap = kDefaultPsumCap);

/// The vertex of the zonotope of f maximizing a.u: the sum of members with a.v > 0.
/// Throws Error(DegenerateNormal) if a.v == 0 for some member.
LatticeVector zonotope_vertex(const VectorFamily& f, const LatticeVector& a);
LatticeVector zonotope_vertex(const VectorFamily& f, const RationalVector& a);

/// max - min of coordinate i over P(f), i.e. the sum of |v_i|.
std::int64_t family_width(const VectorFamily& f, std::size_t i);

/// Membership in the lattice generated by the middle layer: zero coordinate
/// sum and all coordinates of one parity.
bool lattice_member(const LatticeVector& u);

// Family file: "dim n" header, then one vector per line, comma-separated
// integers or a 0/1 string (0 = -1). Blank lines and '#' comments are skipped.
VectorFamily read_family(std::istream& in, std::string label = {}, bool strict = true);
void write_family(std::ostream& out, const VectorFamily& f, bool binary = false);

// PointSet dump: one point per line, comma-separated integers.
PointSet read_point_set(std::istream& in);
void write_point_set(std::ostream& out, const PointSet& s);

} // namespace balgame

#endif
