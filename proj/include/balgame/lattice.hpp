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

#ifndef BALGAME_LATTICE_HPP
#define BALGAME_LATTICE_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace balgame {

// Overflow-checked int64 arithmetic; throws Error(Range) on overflow.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

/// An integer point or direction in Z^n.
class LatticeVector {
public:
    LatticeVector() = default;
    explicit LatticeVector(std::size_t dim) : c_(dim, 0) {}
    LatticeVector(std::initializer_list<std::int64_t> coords) : c_(coords) {}
    explicit LatticeVector(std::vector<std::int64_t> coords) : c_(std::move(coords)) {}

    static LatticeVector unit(std::size_t dim, std::size_t i);
    static LatticeVector ones(std::size_t dim);

    std::size_t dim() const noexcept { return c_.size(); }
    std::int64_t operator[](std::size_t i) const { return c_[i]; }
    std::int64_t& operator[](std::size_t i) { return c_[i]; }
    std::span<const std::int64_t> coords() const noexcept { return c_; }
    const std::vector<std::int64_t>& values() const noexcept { return c_; }

    bool is_zero() const noexcept;
    std::int64_t coord_sum() const;
    std::int64_t norm_inf() const noexcept;

    LatticeVector& operator+=(const LatticeVector& o);
    LatticeVector& operator-=(const LatticeVector& o);
    LatticeVector operator-() const;
    friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
    friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
    friend LatticeVector operator*(std::int64_t s, const LatticeVector& v);

    std::int64_t dot(const LatticeVector& o) const;

    friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
    friend auto operator<=>(const LatticeVector& a, const LatticeVector& b) { return a.c_ <=> b.c_; }

    /// Comma-separated integers, e.g. "1,-1,0".
    std::string to_string() const;
    /// 0/1 string for +-1 vectors (0 = -1); throws if some entry is not +-1.
    std::string to_binary() const;

    static LatticeVector parse(std::string_view text);
    static LatticeVector from_binary(std::string_view bits);

private:
    std::vector<std::int64_t> c_;
};

std::ostream& operator<<(std::ostream& os, const LatticeVector& v);

struct LatticeVectorHash {
    std::size_t operator()(const LatticeVector& v) const noexcept;
};

/// u and v are parallel iff u_i v_j == u_j v_i for all i < j.
bool parallel(const LatticeVector& u, const LatticeVector& v);

/// Exact rational with int64 numerator and positive denominator, always reduced.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value) : num_(value) {} // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num, std::int64_t den);

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }
    bool is_integer() const noexcept { return den_ == 1; }
    std::int64_t floor() const;
    std::int64_t ceil() const;

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    std::string to_string() const;

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

using RationalVector = std::vector<Rational>;

RationalVector to_rational(const LatticeVector& v);
/// Half of an integer vector, e.g. the center of a subset-sum set.
RationalVector half(const LatticeVector& v);
RationalVector operator+(const RationalVector& a, const RationalVector& b);
RationalVector operator-(const RationalVector& a, const RationalVector& b);
/// Throws Error(Range) unless every entry is an integer.
LatticeVector to_lattice(const RationalVector& v);
/// Smallest positive integer multiple of a rational direction, reduced by the gcd.
LatticeVector scale_to_integer(const RationalVector& v);
std::string to_string(const RationalVector& v);

} // namespace balgame

#endif
