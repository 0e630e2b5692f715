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

#include "balgame/lattice.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <ostream>

#include "balgame/error.hpp"

namespace balgame {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::InvalidDimension: return "invalid-dimension";
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::Range: return "range";
    case ErrorKind::SizeLimit: return "size-limit";
    case ErrorKind::DegenerateNormal: return "degenerate-normal";
    case ErrorKind::NotVClosed: return "not-v-closed";
    case ErrorKind::NoWinningMove: return "no-winning-move";
    case ErrorKind::OutOfWindow: return "out-of-window";
    case ErrorKind::PreconditionViolated: return "precondition-violated";
    case ErrorKind::NotExpressible: return "not-expressible";
    case ErrorKind::Unsatisfiable: return "unsatisfiable";
    case ErrorKind::ConstructionFailed: return "construction-failed";
    case ErrorKind::TheoremContradiction: return "theorem-contradiction";
    case ErrorKind::Parse: return "parse";
    }
    return "unknown";
}

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::Range, "integer overflow in addition");
    return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorKind::Range, "integer overflow in subtraction");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::Range, "integer overflow in multiplication");
    return r;
}

LatticeVector LatticeVector::unit(std::size_t dim, std::size_t i)
{
    LatticeVector e(dim);
    e.c_.at(i) = 1;
    return e;
}

LatticeVector LatticeVector::ones(std::size_t dim)
{
    return LatticeVector(std::vector<std::int64_t>(dim, 1));
}

bool LatticeVector::is_zero() const noexcept
{
    return std::all_of(c_.begin(), c_.end(), [](std::int64_t x) { return x == 0; });
}

std::int64_t LatticeVector::coord_sum() const
{
    std::int64_t s = 0;
    for (auto x : c_) s = checked_add(s, x);
    return s;
}

std::int64_t LatticeVector::norm_inf() const noexcept
{
    std::int64_t m = 0;
    for (auto x : c_) m = std::max(m, x < 0 ? -x : x);
    return m;
}

static void require_same_dim(const LatticeVector& a, const LatticeVector& b)
{
    if (a.dim() != b.dim())
        throw Error(ErrorKind::InvalidDimension,
                    "dimension mismatch: " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
}

LatticeVector& LatticeVector::operator+=(const LatticeVector& o)
{
    require_same_dim(*this, o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = checked_add(c_[i], o.c_[i]);
    return *this;
}

LatticeVector& LatticeVector::operator-=(const LatticeVector& o)
{
    require_same_dim(*this, o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = checked_sub(c_[i], o.c_[i]);
    return *this;
}

LatticeVector LatticeVector::operator-() const
{
    LatticeVector r(dim());
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = checked_sub(0, c_[i]);
    return r;
}

LatticeVector operator*(std::int64_t s, const LatticeVector& v)
{
    LatticeVector r(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) r.c_[i] = checked_mul(s, v.c_[i]);
    return r;
}

std::int64_t LatticeVector::dot(const LatticeVector& o) const
{
    require_same_dim(*this, o);
    std::int64_t s = 0;
    for (std::size_t i = 0; i < c_.size(); ++i) s = checked_add(s, checked_mul(c_[i], o.c_[i]));
    return s;
}

std::string LatticeVector::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(c_[i]);
    }
    return out;
}

std::string LatticeVector::to_binary() const
{
    std::string out;
    out.reserve(c_.size());
    for (auto x : c_) {
        if (x == 1) out += '1';
        else if (x == -1) out += '0';
        else throw Error(ErrorKind::InvalidArgument, "binary form needs +-1 entries: " + to_string());
    }
    return out;
}

LatticeVector LatticeVector::parse(std::string_view text)
{
    std::vector<std::int64_t> coords;
    std::size_t pos = 0;
    while (true) {
        auto comma = text.find(',', pos);
        auto field = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        while (!field.empty() && (field.front() == ' ' || field.front() == '\t')) field.remove_prefix(1);
        while (!field.empty() && (field.back() == ' ' || field.back() == '\t' || field.back() == '\r'))
            field.remove_suffix(1);
        if (!field.empty() && field.front() == '+') field.remove_prefix(1);
        std::int64_t value = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (field.empty() || ec != std::errc() || ptr != field.data() + field.size())
            throw Error(ErrorKind::Parse, "bad integer '" + std::string(field) + "' in '" + std::string(text) + "'");
        coords.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return LatticeVector(std::move(coords));
}

LatticeVector LatticeVector::from_binary(std::string_view bits)
{
    LatticeVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') v.c_[i] = 1;
        else if (bits[i] == '0') v.c_[i] = -1;
        else throw Error(ErrorKind::Parse, "bad binary vector '" + std::string(bits) + "'");
    }
    return v;
}

std::ostream& operator<<(std::ostream& os, const LatticeVector& v)
{
    return os << '(' << v.to_string() << ')';
}

std::size_t LatticeVectorHash::operator()(const LatticeVector& v) const noexcept
{
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ v.dim();
    for (auto x : v.coords()) {
        h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h *= 0xff51afd7ed558ccdull;
    }
    return static_cast<std::size_t>(h ^ (h >> 33));
}

bool parallel(const LatticeVector& u, const LatticeVector& v)
{
    require_same_dim(u, v);
    for (std::size_t i = 0; i < u.dim(); ++i)
        for (std::size_t j = i + 1; j < u.dim(); ++j)
            if (checked_mul(u[i], v[j]) != checked_mul(u[j], v[i])) return false;
    return true;
}

// ---- Rational ------------------------------------------------------------

static std::int64_t narrow(__int128 x)
{
    if (x > INT64_MAX || x < INT64_MIN) throw Error(ErrorKind::Range, "rational overflow");
    return static_cast<std::int64_t>(x);
}

static Rational make_reduced(__int128 num, __int128 den)
{
    if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
    if (den < 0) { num = -num; den = -den; }
    __int128 a = num < 0 ? -num : num, b = den;
    while (b) { auto t = a % b; a = b; b = t; }
    if (a > 1) { num /= a; den /= a; }
    return Rational(narrow(num), narrow(den));
}

Rational::Rational(std::int64_t num, std::int64_t den)
{
    if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
    __int128 n = num, d = den;
    if (d < 0) { n = -n; d = -d; }
    __int128 a = n < 0 ? -n : n, b = d;
    while (b) { auto t = a % b; a = b; b = t; }
    if (a > 1) { n /= a; d /= a; }
    num_ = narrow(n);
    den_ = narrow(d);
}

std::int64_t Rational::floor() const
{
    auto q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
}

std::int64_t Rational::ceil() const
{
    auto q = num_ / den_;
    if (num_ % den_ != 0 && num_ > 0) ++q;
    return q;
}

Rational Rational::operator-() const { return make_reduced(-static_cast<__int128>(num_), den_); }

Rational operator+(const Rational& a, const Rational& b)
{
    return make_reduced(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                        static_cast<__int128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b)
{
    return make_reduced(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b)
{
    if (b.num_ == 0) throw Error(ErrorKind::InvalidArgument, "division by zero");
    return make_reduced(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b)
{
    return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
}

std::string Rational::to_string() const
{
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

RationalVector to_rational(const LatticeVector& v)
{
    return RationalVector(v.coords().begin(), v.coords().end());
}

RationalVector half(const LatticeVector& v)
{
    RationalVector r;
    r.reserve(v.dim());
    for (auto x : v.coords()) r.emplace_back(x, 2);
    return r;
}

RationalVector operator+(const RationalVector& a, const RationalVector& b)
{
    if (a.size() != b.size()) throw Error(ErrorKind::InvalidDimension, "dimension mismatch");
    RationalVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

RationalVector operator-(const RationalVector& a, const RationalVector& b)
{
    if (a.size() != b.size()) throw Error(ErrorKind::InvalidDimension, "dimension mismatch");
    RationalVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

LatticeVector to_lattice(const RationalVector& v)
{
    LatticeVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_integer()) throw Error(ErrorKind::Range, "non-integer entry " + v[i].to_string());
        r[i] = v[i].num();
    }
    return r;
}

LatticeVector scale_to_integer(const RationalVector& v)
{
    std::int64_t l = 1;
    for (const auto& x : v) l = checked_mul(l / std::gcd(l, x.den()), x.den());
    LatticeVector r(v.size());
    std::int64_t g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        r[i] = checked_mul(v[i].num(), l / v[i].den());
        g = std::gcd(g, r[i]);
    }
    if (g > 1)
        for (std::size_t i = 0; i < v.size(); ++i) r[i] /= g;
    return r;
}

std::string to_string(const RationalVector& v)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += v[i].to_string();
    }
    return out;
}

} // namespace balgame
