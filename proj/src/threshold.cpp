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

#include "balgame/threshold.hpp"

#include "balgame/error.hpp"

namespace balgame {

std::int64_t binomial(std::int64_t n, std::int64_t k)
{
    if (n < 0) throw Error(ErrorKind::InvalidArgument, "binomial needs n >= 0");
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 c = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        // c * (n - k + i) is divisible by i because c = C(n - k + i - 1, i - 1).
        c = c * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
        if (c > static_cast<unsigned __int128>(INT64_MAX))
            throw Error(ErrorKind::Range, "C(" + std::to_string(n) + "," + std::to_string(k) + ") exceeds int64");
    }
    return static_cast<std::int64_t>(c);
}

int nu2(std::int64_t x)
{
    if (x <= 0) throw Error(ErrorKind::InvalidArgument, "nu2 needs a positive integer, got " + std::to_string(x));
    return __builtin_ctzll(static_cast<unsigned long long>(x));
}

std::int64_t nu2_factorial(std::int64_t n)
{
    if (n < 0) throw Error(ErrorKind::InvalidArgument, "nu2_factorial needs n >= 0");
    std::int64_t v = 0;
    for (std::int64_t p = 2; p <= n; p *= 2) {
        v += n / p;
        if (p > n / 2) break;
    }
    return v;
}

bool is_power_of_two(std::int64_t n) noexcept { return n > 0 && (n & (n - 1)) == 0; }

Parity half_central_parity(std::int64_t n)
{
    if (n < 2 || n % 2 != 0) throw Error(ErrorKind::InvalidArgument, "half_central_parity needs even n >= 2");
    const auto v = nu2_factorial(n) - 2 * nu2_factorial(n / 2);
    if (v < 1) throw Error(ErrorKind::ConstructionFailed, "central binomial coefficient is odd");
    return v == 1 ? Parity::Odd : Parity::Even;
}

std::string_view to_string(DimensionClass c)
{
    switch (c) {
    case DimensionClass::Odd: return "odd";
    case DimensionClass::EvenNotPowerOfTwo: return "even";
    case DimensionClass::PowerOfTwo: return "pow2";
    }
    return "unknown";
}

DimensionClass classify(std::int64_t n)
{
    if (n % 2 != 0) return DimensionClass::Odd;
    return is_power_of_two(n) ? DimensionClass::PowerOfTwo : DimensionClass::EvenNotPowerOfTwo;
}

static void require_threshold_dim(std::int64_t n)
{
    if (n < 2) throw Error(ErrorKind::InvalidDimension, "threshold needs n >= 2");
    if (n > kMaxThresholdDim)
        throw Error(ErrorKind::Range, "threshold arithmetic limited to n <= " + std::to_string(kMaxThresholdDim));
}

std::int64_t r_value(std::int64_t n)
{
    if (n < 1) throw Error(ErrorKind::InvalidDimension, "r_value needs n >= 1");
    if (n > kMaxThresholdDim)
        throw Error(ErrorKind::Range, "threshold arithmetic limited to n <= " + std::to_string(kMaxThresholdDim));
    if (n == 1) return 1;
    const Rational pow = Rational(std::int64_t{1} << (n - 2));
    Rational r = n % 2 != 0 ? Rational(n, 2) * binomial(n - 1, (n - 1) / 2) + pow
                            : Rational(n, 4) * binomial(n, n / 2) + pow;
    if (!r.is_integer()) throw Error(ErrorKind::ConstructionFailed, "r is not an integer");
    return r.num();
}

std::int64_t r_direct(const VectorFamily& f)
{
    const auto ones = LatticeVector::ones(f.dim());
    std::int64_t r = 0;
    for (const auto& v : f) {
        const auto d = v.dot(ones);
        if (d > 0) r = checked_add(r, d);
    }
    return r;
}

ThresholdReport critical_M(std::int64_t n)
{
    require_threshold_dim(n);
    ThresholdReport rep;
    rep.n = n;
    rep.cls = classify(n);
    rep.r = r_value(n);

    const Rational pow = Rational(std::int64_t{1} << (n - 2));
    const std::int64_t c = n % 2 != 0 ? binomial(n - 1, (n - 1) / 2) : binomial(n - 1, n / 2);
    rep.m_crit = pow - Rational(c, 2);
    rep.trace.emplace_back("2^(n-2)", pow.to_string());
    rep.trace.emplace_back(n % 2 != 0 ? "C(n-1,(n-1)/2)" : "C(n-1,n/2)", std::to_string(c));
    if (rep.cls == DimensionClass::PowerOfTwo) {
        rep.m_crit += Rational(1, 2);
        rep.trace.emplace_back("parity correction", "1/2");
    }
    rep.raw_bound = pow + (pow - Rational(rep.r)) / Rational(n);
    rep.trace.emplace_back("r", std::to_string(rep.r));
    rep.trace.emplace_back("raw bound", rep.raw_bound.to_string());

    if (!rep.m_crit.is_integer())
        throw Error(ErrorKind::ConstructionFailed, "critical M is not an integer for n=" + std::to_string(n));
    if (rep.raw_bound.ceil() != rep.m_crit.num())
        throw Error(ErrorKind::ConstructionFailed, "critical M " + rep.m_crit.to_string() +
                                                       " is not the ceiling of the raw bound " +
                                                       rep.raw_bound.to_string());
    rep.m_crit_int = rep.m_crit.num();
    return rep;
}

CrossValidation cross_validate(std::int64_t n, std::int64_t margin, bool allow_large, std::size_t volume_limit)
{
    if (n < 2 || n > 5 || (n == 5 && !allow_large))
        throw Error(ErrorKind::SizeLimit, "cross validation supports n in {2,3,4} (n=5 with the opt-in flag)");
    if (margin < 0) throw Error(ErrorKind::InvalidArgument, "margin must be >= 0");

    CrossValidation cv;
    cv.n = n;
    cv.m_crit = critical_M(n).m_crit_int;
    const auto family = canonical_family(static_cast<std::size_t>(n));
    cv.agrees = true;
    for (std::int64_t m = cv.m_crit - margin; m <= cv.m_crit + margin; ++m) {
        CrossValidationRow row;
        row.m = m;
        if (m < 0) {
            // The origin itself violates the bound; Pusher has already won.
            row.origin_outside_region = true;
            row.winner = Winner::PusherWithinWindow;
        } else {
            auto v = verdict(GameRegion::uniform(static_cast<std::size_t>(n), m), family, std::nullopt, volume_limit);
            row.winner = v.winner;
            row.origin_rank = v.origin_rank;
            row.safe_size = v.certificate.safe_size();
        }
        const bool expect_chooser = m >= cv.m_crit;
        if ((row.winner == Winner::Chooser) != expect_chooser) cv.agrees = false;
        if (row.winner == Winner::Chooser && !cv.flip_at) cv.flip_at = m;
        cv.rows.push_back(row);
    }
    return cv;
}

} // namespace balgame
