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

#ifndef BALGAME_BALANCE_HPP
#define BALGAME_BALANCE_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "balgame/core.hpp"

namespace balgame {

/// One +-1 sign per family member, in family order.
struct SignAssignment {
    std::shared_ptr<const VectorFamily> family;
    std::vector<int> signs;

    LatticeVector signed_sum() const;
    /// Members with sign +1.
    std::vector<bool> positive_subset() const;
};

/// Signs over the canonical family for odd n >= 3: the sign of each member's
/// coordinate sum. Their signed sum is C(n-1, (n-1)/2) times the all-ones vector.
SignAssignment odd_signs(std::size_t n);

/// Canonical members with coordinate sum 0 (even n), in canonical order.
VectorFamily middle_layer(std::size_t n);

/// Representative of v up to sign: the one with a positive first nonzero coordinate.
LatticeVector sign_canonical(const LatticeVector& v);

/// Pairs of middle-layer vectors (up to sign) differing by 2(e_1 - e_i), plus one extra vector.
///
/// For i = 2..n and j = 1..R the pair is (plus, minus) with plus_1 = 1,
/// plus_i = -1 and minus equal to plus with coordinates 1 and i negated.
/// All stored vectors are pairwise distinct up to sign.
class PairSystem {
public:
    PairSystem(std::size_t n, std::size_t r) : n_(n), r_(r) {}

    std::size_t n() const noexcept { return n_; }
    std::size_t multiplicity() const noexcept { return r_; }
    /// Pair (i, j), 1-based i in [2, n], j in [1, R].
    const LatticeVector& plus(std::size_t i, std::size_t j) const { return pairs_.at(slot(i, j)).first; }
    const LatticeVector& minus(std::size_t i, std::size_t j) const { return pairs_.at(slot(i, j)).second; }
    const LatticeVector& extra() const noexcept { return extra_; }

    /// plus(2,1), minus(2,1), plus(2,2), ..., minus(n,R), extra.
    std::vector<LatticeVector> vectors() const;
    std::size_t vector_count() const noexcept { return 2 * pairs_.size() + 1; }

    /// Description of the first broken invariant, or nullopt.
    std::optional<std::string> check() const;

private:
    friend PairSystem greedy_pairs(std::size_t, std::size_t);
    std::size_t slot(std::size_t i, std::size_t j) const { return (i - 2) * r_ + (j - 1); }
    std::size_t n_;
    std::size_t r_;
    std::vector<std::pair<LatticeVector, LatticeVector>> pairs_;
    LatticeVector extra_;
};

/// Fills a PairSystem greedily. Needs even n >= 4 and C(n-2, (n-2)/2) > 4R(n-1);
/// throws Error(PreconditionViolated) otherwise.
PairSystem greedy_pairs(std::size_t n, std::size_t r);

struct PartialColoring {
    std::vector<int> signs;
    LatticeVector sum;          // sum of signs[k] * vs[k]
    std::size_t rounded = 0;    // coefficients still fractional when the walk stopped
    std::size_t flips = 0;      // improving flips made by the local search
};

/// Signs for +-1 vectors with ||sum||_inf <= n, from an exact fractional
/// walk in the kernel followed by rounding and single-flip descent.
PartialColoring partial_color(std::span<const LatticeVector> vs);

/// Subset of ps.vectors() whose sum is `target`.
/// Needs target in the middle-layer lattice and ||target - center(U)||_inf <= R;
/// throws Error(NotExpressible) otherwise.
std::vector<bool> express_in_pairs(const LatticeVector& target, const PairSystem& ps);

/// Coordinate rotation (v_2, ..., v_n, v_1).
LatticeVector rotate(const LatticeVector& v);

struct Orbit {
    LatticeVector representative;
    std::vector<LatticeVector> members; // representative, rotate(rep), ...
    bool self_negating = false;
};

/// Rotation orbits of the middle layer and its negation, in order of first
/// appearance when the vectors are listed by increasing 0/1 string.
std::vector<Orbit> orbit_decompose(std::size_t n);

/// Signs with eps(-v) = -eps(v) and sum eps(v) v = target over vs, which
/// must be closed under negation. Depth-first search over one vector per
/// +-pair, falling back to meet-in-the-middle past `node_budget` nodes.
/// Throws Error(Unsatisfiable) when no assignment exists.
std::vector<int> search_signs(std::span<const LatticeVector> vs, const LatticeVector& target,
                              std::size_t node_budget = 2'000'000);

enum class BalanceMethod { Orbits, PairPipeline };

std::string_view to_string(BalanceMethod m);

struct MiddleBalance {
    std::size_t n = 0;
    std::shared_ptr<const VectorFamily> layer;
    std::vector<int> signs;
    /// sum of signs[k] * layer[k]: zero unless n is a power of two.
    LatticeVector defect;
    BalanceMethod method = BalanceMethod::Orbits;
    std::optional<PairSystem> pairs;
    std::optional<PartialColoring> coloring;

    /// 1-based coordinates where the defect is +3.
    std::vector<std::size_t> plus_three_positions() const;
};

/// The defect targeted for even n: 0 when n is not a power of two; otherwise
/// +3 on n/4 coordinates and -1 elsewhere ((-1, 1) for n = 2).
LatticeVector target_defect(std::size_t n);

/// Signs on the middle layer with signed sum equal to target_defect(n).
MiddleBalance balance_middle(std::size_t n);

struct ChooserPlan {
    std::size_t n = 0;
    std::shared_ptr<const VectorFamily> family;
    std::vector<int> signs;
    std::vector<bool> subset;          // members with sign +1
    RationalVector translate;          // t, with 0 = t + sum(subset)
    std::int64_t bound = 0;            // M
    LatticeVector defect;              // middle-layer signed sum (0 for odd n)
    std::vector<Rational> max_coords;  // max over t + P(V) of each coordinate
};

/// Chooser's starting translate for the critical bound: t + P(V) lies in K_M
/// and contains the origin via the returned subset.
ChooserPlan chooser_translate(std::size_t n);

// Sign table text: one "+ 0101..." / "- 0101..." line per vector (0 = -1).
struct SignTable {
    std::size_t n = 0;
    std::vector<std::pair<int, LatticeVector>> rows;

    LatticeVector sum() const;
    /// Every row's negation is present with the opposite sign.
    bool antisymmetric() const;
};

SignTable read_sign_table(std::istream& in);
void write_sign_table(std::ostream& out, const SignTable& t);

/// Bundled reference tables over the self-negating orbit vectors, n in {4, 6, 8, 10, 12}.
SignTable reference_sign_table(std::size_t n);
std::vector<std::size_t> reference_sign_table_sizes();
/// Expected table sum: twice the small-n defect.
LatticeVector reference_table_target(std::size_t n);

/// The signs of a balance as a table over the middle layer and its negation (antisymmetric).
SignTable to_sign_table(const MiddleBalance& b);

} // namespace balgame

#endif
