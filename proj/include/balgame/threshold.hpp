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

#ifndef BALGAME_THRESHOLD_HPP
#define BALGAME_THRESHOLD_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "balgame/core.hpp"
#include "balgame/game.hpp"

namespace balgame {

/// Exact C(n, k) by the multiplicative recurrence; throws Error(Range) if it exceeds int64.
std::int64_t binomial(std::int64_t n, std::int64_t k);

/// 2-adic valuation of x >= 1.
int nu2(std::int64_t x);

/// 2-adic valuation of n!, by Legendre's formula.
std::int64_t nu2_factorial(std::int64_t n);

bool is_power_of_two(std::int64_t n) noexcept;

enum class Parity { Even, Odd };

/// Parity of C(n, n/2) / 2 for even n >= 2, from 2-adic valuations of factorials.
Parity half_central_parity(std::int64_t n);

enum class DimensionClass { Odd, EvenNotPowerOfTwo, PowerOfTwo };

std::string_view to_string(DimensionClass c);
DimensionClass classify(std::int64_t n);

/// Largest dimension for which threshold arithmetic stays inside int64.
inline constexpr std::int64_t kMaxThresholdDim = 60;

/// max of u.1 over P(V) for the canonical family, closed form.
std::int64_t r_value(std::int64_t n);
/// The same maximum for any family: sum of v.1 over members with v.1 > 0.
std::int64_t r_direct(const VectorFamily& f);

struct ThresholdReport {
    std::int64_t n = 0;
    DimensionClass cls = DimensionClass::Odd;
    std::int64_t r = 0;
    Rational m_crit;
    std::int64_t m_crit_int = 0;
    /// 2^{n-2} + (2^{n-2} - r) / n; m_crit is its ceiling.
    Rational raw_bound;
    std::vector<std::pair<std::string, std::string>> trace;
};

/// Least M for which Chooser wins G(V, K_M) on the canonical family.
ThresholdReport critical_M(std::int64_t n);

struct CrossValidationRow {
    std::int64_t m = 0;
    Winner winner = Winner::PusherWithinWindow;
    bool origin_outside_region = false;
    std::optional<std::uint32_t> origin_rank;
    std::size_t safe_size = 0;
};

struct CrossValidation {
    std::int64_t n = 0;
    std::int64_t m_crit = 0;
    std::vector<CrossValidationRow> rows;
    /// Smallest M in the sweep with a Chooser verdict.
    std::optional<std::int64_t> flip_at;
    bool agrees = false;
};

/// Solves the windowed game for every M in [M_crit - margin, M_crit + margin]
/// and checks that the verdict switches to Chooser exactly at M_crit.
/// n in {2,3,4}; n = 5 only with allow_large.
CrossValidation cross_validate(std::int64_t n, std::int64_t margin = 2, bool allow_large = false,
                               std::size_t volume_limit = kDefaultVolumeLimit);

} // namespace balgame

#endif
