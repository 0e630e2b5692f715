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

#ifndef BALGAME_GAME_HPP
#define BALGAME_GAME_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "balgame/core.hpp"

namespace balgame {

/// The region {x : x_i <= M_i for all i}.
struct GameRegion {
    std::vector<std::int64_t> upper;

    static GameRegion uniform(std::size_t n, std::int64_t m) { return {std::vector<std::int64_t>(n, m)}; }
    std::size_t dim() const noexcept { return upper.size(); }
    bool contains(const LatticeVector& z) const;
    /// M_i - z_i per coordinate.
    std::vector<std::int64_t> slack(const LatticeVector& z) const;
};

/// A box of lattice points, product of [lo_i, hi_i].
struct Window {
    std::vector<std::int64_t> lo;
    std::vector<std::int64_t> hi;

    Window() = default;
    Window(std::vector<std::int64_t> lo_, std::vector<std::int64_t> hi_);
    static Window cube(std::size_t n, std::int64_t lo, std::int64_t hi);
    /// "lo:hi" for every coordinate, or "lo:hi,lo:hi,..." per coordinate.
    static Window parse(const std::string& spec, std::size_t dim);

    std::size_t dim() const noexcept { return lo.size(); }
    /// Number of lattice points; throws Error(SizeLimit) past `limit`.
    std::size_t volume(std::size_t limit = SIZE_MAX) const;
    bool contains(const LatticeVector& z) const;
    std::size_t index(const LatticeVector& z) const;
    LatticeVector point(std::size_t index) const;
    std::string to_string() const;
};

struct Violation {
    LatticeVector point;
    std::size_t member = 0;
};

/// First (point, member) pair, in lexicographic order, for which neither
/// point + v nor point - v lies in T; nullopt if T is V-closed.
std::optional<Violation> first_violation(const PointSet& t, const VectorFamily& f);
inline bool is_vclosed(const PointSet& t, const VectorFamily& f) { return !first_violation(t, f); }

inline constexpr std::size_t kDefaultVolumeLimit = 100'000'000;

/// Greatest V-closed subset of a window, with the deletion record that
/// backs a Pusher strategy off it.
///
/// Deletion runs in synchronous rounds: round r removes every surviving
/// point z that has a member v with both z+v and z-v already removed in
/// rounds < r or lying outside the window. The recorded witness is the
/// lowest such member index, so ranks and witnesses are deterministic.
class SafeSetCertificate {
public:
    const Window& window() const noexcept { return window_; }
    const VectorFamily& family() const noexcept { return family_; }
    std::uint32_t rounds() const noexcept { return rounds_; }

    bool in_window(const LatticeVector& z) const { return window_.contains(z); }
    bool is_safe(const LatticeVector& z) const;
    /// Deletion round of z (>= 1), or nullopt if z is safe. z must be in the window.
    std::optional<std::uint32_t> rank(const LatticeVector& z) const;
    /// Member index that removed z. z must be a deleted window point.
    std::size_t witness(const LatticeVector& z) const;

    std::size_t safe_size() const noexcept { return safe_count_; }
    PointSet safe_set() const;
    /// All deleted window points, lexicographic order.
    std::vector<LatticeVector> deleted_points() const;

private:
    friend SafeSetCertificate maximal_vclosed_subset(const Window&, const VectorFamily&, std::size_t);
    Window window_;
    VectorFamily family_;
    std::vector<std::uint32_t> rank_;    // 0 = safe
    std::vector<std::uint32_t> witness_; // member index for deleted points
    std::uint32_t rounds_ = 0;
    std::size_t safe_count_ = 0;
};

SafeSetCertificate maximal_vclosed_subset(const Window& w, const VectorFamily& f,
                                          std::size_t volume_limit = kDefaultVolumeLimit);

/// Greatest V-closed subset of an arbitrary finite candidate set.
PointSet maximal_vclosed_subset(const PointSet& candidates, const VectorFamily& f);

/// Re-checks a certificate from its stored tables: the safe set is V-closed
/// inside the window and every deleted point's witness neighbours were
/// deleted strictly earlier or lie outside. Returns a description of the
/// first failure, or nullopt.
std::optional<std::string> check_certificate(const SafeSetCertificate& cert);

/// True if f is exactly the canonical +-1 family of its dimension (any order).
bool is_canonical(const VectorFamily& f);

/// 2^n + 2 for canonical families; max coordinate width + 2 otherwise.
std::int64_t default_window_margin(const VectorFamily& f);

enum class Winner { Chooser, PusherWithinWindow };

struct VerdictResult {
    Winner winner = Winner::PusherWithinWindow;
    GameRegion region;
    std::int64_t margin = 0;
    /// False when the family is not canonical: a Pusher verdict then only
    /// covers play confined to the window.
    bool canonical = false;
    std::optional<std::uint32_t> origin_rank;
    SafeSetCertificate certificate;
};

/// Solves G(f, region) on the window prod [M_i - margin, M_i].
VerdictResult verdict(const GameRegion& region, const VectorFamily& f, std::optional<std::int64_t> margin = {},
                      std::size_t volume_limit = kDefaultVolumeLimit);

/// Chooser's subset strategy: the position is always t + sum of the tracked subset.
class ChooserEngine {
public:
    ChooserEngine(VectorFamily f, RationalVector t, std::vector<bool> subset);

    /// Sign for the offered member; toggles its subset membership.
    int respond(std::size_t member);
    int respond(const LatticeVector& v);

    const VectorFamily& family() const noexcept { return family_; }
    const std::vector<bool>& subset() const noexcept { return subset_; }
    const RationalVector& translate() const noexcept { return t_; }
    /// t + sum of the current subset, recomputed from scratch.
    RationalVector position() const;

private:
    VectorFamily family_;
    RationalVector t_;
    std::vector<bool> subset_;
};

/// Pusher strategy read off the deletion ranks of a certificate.
class PusherEngine {
public:
    PusherEngine(SafeSetCertificate cert, GameRegion region);

    /// Member to offer at z, or nullopt if z is already outside the region.
    /// Throws NoWinningMove for safe z and OutOfWindow for z below the window.
    std::optional<std::size_t> offer(const LatticeVector& z) const;

    const SafeSetCertificate& certificate() const noexcept { return cert_; }
    const GameRegion& region() const noexcept { return region_; }

private:
    SafeSetCertificate cert_;
    GameRegion region_;
};

// ---- play ----------------------------------------------------------------

class ChooserPolicy {
public:
    virtual ~ChooserPolicy() = default;
    /// +1 or -1 for the offered member; nullopt aborts the game.
    virtual std::optional<int> choose(const LatticeVector& z, std::size_t member) = 0;
};

class PusherPolicy {
public:
    virtual ~PusherPolicy() = default;
    /// Member to offer; nullopt aborts the game.
    virtual std::optional<std::size_t> offer(const LatticeVector& z) = 0;
};

class SubsetChooser : public ChooserPolicy {
public:
    explicit SubsetChooser(ChooserEngine engine) : engine_(std::move(engine)) {}
    std::optional<int> choose(const LatticeVector&, std::size_t member) override { return engine_.respond(member); }
    const ChooserEngine& engine() const noexcept { return engine_; }

private:
    ChooserEngine engine_;
};

class RandomChooser : public ChooserPolicy {
public:
    explicit RandomChooser(std::uint64_t seed) : rng_(seed) {}
    std::optional<int> choose(const LatticeVector&, std::size_t) override { return (rng_() & 1) ? 1 : -1; }

private:
    std::mt19937_64 rng_;
};

/// Picks the sign that keeps the largest coordinate smallest (ties: +1).
class GreedyChooser : public ChooserPolicy {
public:
    explicit GreedyChooser(const VectorFamily& f) : family_(f) {}
    std::optional<int> choose(const LatticeVector& z, std::size_t member) override;

private:
    const VectorFamily& family_;
};

class RandomPusher : public PusherPolicy {
public:
    RandomPusher(std::size_t family_size, std::uint64_t seed) : size_(family_size), rng_(seed) {}
    std::optional<std::size_t> offer(const LatticeVector&) override { return rng_() % size_; }

private:
    std::size_t size_;
    std::mt19937_64 rng_;
};

class RankPusher : public PusherPolicy {
public:
    explicit RankPusher(const PusherEngine& engine) : engine_(engine) {}
    std::optional<std::size_t> offer(const LatticeVector& z) override { return engine_.offer(z); }

private:
    const PusherEngine& engine_;
};

/// Line-oriented terminal player. Prompts go to `out`, answers come from `in`.
class HumanChooser : public ChooserPolicy {
public:
    HumanChooser(const VectorFamily& f, const GameRegion& region, std::istream& in, std::ostream& out)
        : family_(f), region_(region), in_(in), out_(out) {}
    std::optional<int> choose(const LatticeVector& z, std::size_t member) override;

private:
    const VectorFamily& family_;
    const GameRegion& region_;
    std::istream& in_;
    std::ostream& out_;
};

class HumanPusher : public PusherPolicy {
public:
    HumanPusher(const VectorFamily& f, const GameRegion& region, std::istream& in, std::ostream& out)
        : family_(f), region_(region), in_(in), out_(out) {}
    std::optional<std::size_t> offer(const LatticeVector& z) override;

private:
    const VectorFamily& family_;
    const GameRegion& region_;
    std::istream& in_;
    std::ostream& out_;
};

struct Round {
    std::size_t member = 0;
    int sign = 1;
    LatticeVector position; // after the move
};

enum class Outcome { ChooserSurvived, PusherEscaped, Aborted };

std::string_view to_string(Outcome o);

struct Transcript {
    GameRegion region;
    LatticeVector initial;
    std::vector<Round> rounds;
    Outcome outcome = Outcome::ChooserSurvived;
    /// Set when a policy aborted (for example a rank Pusher that left its window).
    std::string note;

    const LatticeVector& final_position() const { return rounds.empty() ? initial : rounds.back().position; }
};

/// Plays from the origin until the position leaves the region or `rounds` moves were made.
Transcript simulate(const GameRegion& region, const VectorFamily& f, ChooserPolicy& chooser, PusherPolicy& pusher,
                    std::size_t rounds);

} // namespace balgame

#endif
