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

#ifndef BALGAME_WITNESS_HPP
#define BALGAME_WITNESS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "balgame/core.hpp"

namespace balgame {

inline constexpr std::size_t kDefaultWitnessSetLimit = 500;
inline constexpr std::size_t kMaxWitnessFamilySize = 12;

/// Exact test for q in conv(points). Uses integer cross products in the
/// plane and an exact rational LP otherwise.
bool in_convex_hull(const std::vector<LatticeVector>& points, const LatticeVector& q);
/// Same question, always answered by the LP (kept for cross-checking the planar path).
bool in_convex_hull_lp(const std::vector<LatticeVector>& points, const LatticeVector& q);

/// Points of T that are not convex combinations of the other points of T.
std::vector<LatticeVector> extreme_points(const PointSet& t, std::size_t limit = kDefaultWitnessSetLimit);

struct ExposingNormal {
    LatticeVector direction;  // integer multiple of the max-margin normal
    Rational margin;          // min over y != x of a.(x - y), for the box-normalized a
};

/// A direction a with a.x > a.y for every other y in T, chosen to maximize
/// the smallest gap over |a_i| <= 1; nullopt if none exists.
/// Throws Error(PreconditionViolated) if x is not an extreme point of T.
std::optional<ExposingNormal> exposed_normal(const PointSet& t, const LatticeVector& x);

/// Perturbs an exposing normal of x so that it stays exposing and has a.v != 0 for every member.
LatticeVector admissible_normal(const PointSet& t, const LatticeVector& x, const LatticeVector& a,
                                const VectorFamily& f);

struct WitnessCertificate {
    VectorFamily family;
    PointSet set;
    LatticeVector x;       // the exposed point
    LatticeVector normal;  // a, with a.v != 0 for all members
    LatticeVector vertex;  // p, the zonotope vertex for a
    LatticeVector translate; // t = x - p
    std::vector<bool> checks; // t + u in conv T, for u in sorted P(V)
    bool verified = false;
};

/// The translate t + P(V) through an exposed point x of a finite V-closed set,
/// with every point of it checked to lie in conv T.
WitnessCertificate translate_witness(const PointSet& t, const VectorFamily& f, const LatticeVector& x);

/// Recomputes the certificate's checks from its family, set, x and normal.
bool replay(const WitnessCertificate& cert);

/// Seeded finite V-closed set: a few random translates of P(V) plus random
/// extra points, reduced to the largest V-closed subset (which keeps every translate).
PointSet random_vclosed(const VectorFamily& f, std::uint64_t seed, std::size_t budget = kDefaultWitnessSetLimit);

} // namespace balgame

#endif
