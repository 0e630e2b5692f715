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

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "balgame/balance.hpp"
#include "balgame/error.hpp"

namespace balgame {
namespace {

// A nonzero kernel vector of the n x k matrix whose columns are cols, or an
// empty vector if the columns are independent.
std::vector<mpq_class> kernel_direction(const std::vector<const LatticeVector*>& cols, std::size_t n)
{
    const std::size_t k = cols.size();
    std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(k));
    for (std::size_t c = 0; c < k; ++c)
        for (std::size_t r = 0; r < n; ++r) m[r][c] = static_cast<long>((*cols[c])[r]);

    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    std::vector<bool> is_pivot(k, false);
    for (std::size_t c = 0; c < k && row < n; ++c) {
        std::size_t p = row;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) continue;
        std::swap(m[p], m[row]);
        const mpq_class inv = 1 / m[row][c];
        for (std::size_t j = c; j < k; ++j) m[row][j] *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == row || m[r][c] == 0) continue;
            const mpq_class f = m[r][c];
            for (std::size_t j = c; j < k; ++j) m[r][j] -= f * m[row][j];
        }
        pivot_col.push_back(c);
        is_pivot[c] = true;
        ++row;
    }
    std::size_t free_col = k;
    for (std::size_t c = 0; c < k; ++c)
        if (!is_pivot[c]) {
            free_col = c;
            break;
        }
    if (free_col == k) return {};
    std::vector<mpq_class> d(k);
    d[free_col] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r) d[pivot_col[r]] = -m[r][free_col];
    return d;
}

struct Objective {
    std::int64_t peak;
    std::size_t at_peak;
    friend bool operator<(const Objective& a, const Objective& b)
    {
        return a.peak != b.peak ? a.peak < b.peak : a.at_peak < b.at_peak;
    }
};

Objective objective(const LatticeVector& x)
{
    Objective o{0, 0};
    for (auto c : x.coords()) {
        const std::int64_t a = c < 0 ? -c : c;
        if (a > o.peak) o = {a, 1};
        else if (a == o.peak) ++o.at_peak;
    }
    return o;
}

} // namespace

PartialColoring partial_color(std::span<const LatticeVector> vs)
{
    PartialColoring out;
    if (vs.empty()) return out;
    const std::size_t n = vs[0].dim();
    for (const auto& v : vs) {
        if (v.dim() != n) throw Error(ErrorKind::InvalidDimension, "partial_color: mixed dimensions");
        for (auto c : v.coords())
            if (c != 1 && c != -1) throw Error(ErrorKind::InvalidArgument, "partial_color: entries must be +-1");
    }
    const std::size_t count = vs.size();
    std::vector<mpq_class> lambda(count);
    std::vector<bool> fixed(count, false);
    std::vector<std::size_t> active;
    std::size_t next = 0;

    for (;;) {
        while (active.size() < n + 1 && next < count) active.push_back(next++);
        std::vector<const LatticeVector*> cols;
        cols.reserve(active.size());
        for (auto k : active) cols.push_back(&vs[k]);
        const auto d = kernel_direction(cols, n);
        if (d.empty()) break; // only possible once every vector has been brought in

        mpq_class step;
        bool have = false;
        for (std::size_t a = 0; a < active.size(); ++a) {
            if (d[a] == 0) continue;
            const auto& l = lambda[active[a]];
            mpq_class s = d[a] > 0 ? (1 - l) / d[a] : (-1 - l) / d[a];
            if (!have || s < step) {
                step = s;
                have = true;
            }
        }
        std::vector<std::size_t> still;
        for (std::size_t a = 0; a < active.size(); ++a) {
            auto& l = lambda[active[a]];
            l += step * d[a];
            if (l == 1 || l == -1) fixed[active[a]] = true;
            else still.push_back(active[a]);
        }
        active = std::move(still);
    }

    // The walk never leaves the kernel.
    for (std::size_t r = 0; r < n; ++r) {
        mpq_class s = 0;
        for (std::size_t k = 0; k < count; ++k) s += lambda[k] * static_cast<long>(vs[k][r]);
        if (s != 0) throw Error(ErrorKind::ConstructionFailed, "partial_color: walk left the kernel");
    }

    out.signs.resize(count);
    out.rounded = active.size();
    if (out.rounded > n)
        throw Error(ErrorKind::ConstructionFailed, "partial_color: " + std::to_string(out.rounded) +
                                                       " fractional coefficients remain");
    LatticeVector x(n);
    for (std::size_t k = 0; k < count; ++k) {
        out.signs[k] = fixed[k] ? (lambda[k] > 0 ? 1 : -1) : (lambda[k] >= 0 ? 1 : -1);
        x += out.signs[k] * vs[k];
    }

    Objective best = objective(x);
    for (bool improved = true; improved && best.peak > 0;) {
        improved = false;
        for (std::size_t k = 0; k < count; ++k) {
            LatticeVector y = x - (2 * out.signs[k]) * vs[k];
            const Objective o = objective(y);
            if (o < best) {
                x = std::move(y);
                best = o;
                out.signs[k] = -out.signs[k];
                ++out.flips;
                improved = true;
            }
        }
    }

    if (x.norm_inf() > static_cast<std::int64_t>(n))
        throw Error(ErrorKind::ConstructionFailed, "partial_color: ||x||_inf = " + std::to_string(x.norm_inf()) +
                                                       " exceeds " + std::to_string(n));
    out.sum = std::move(x);
    return out;
}

} // namespace balgame
