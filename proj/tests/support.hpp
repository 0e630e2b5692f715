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

#ifndef BALGAME_TEST_SUPPORT_HPP
#define BALGAME_TEST_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "balgame/core.hpp"

namespace testing {

// Subset sums by plain bitmask enumeration, independent of set doubling.
inline std::set<balgame::LatticeVector> brute_psum(const balgame::VectorFamily& f)
{
    std::set<balgame::LatticeVector> out;
    const std::uint64_t count = std::uint64_t{1} << f.size();
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        balgame::LatticeVector s(f.dim());
        for (std::size_t k = 0; k < f.size(); ++k)
            if ((mask >> k) & 1U) s += f[k];
        out.insert(s);
    }
    return out;
}

// Random strict family with small integer entries.
inline balgame::VectorFamily random_family(std::mt19937_64& rng, std::size_t dim, std::size_t size, int range = 2)
{
    std::uniform_int_distribution<int> coord(-range, range);
    std::vector<balgame::LatticeVector> members;
    while (members.size() < size) {
        balgame::LatticeVector v(dim);
        for (std::size_t i = 0; i < dim; ++i) v[i] = coord(rng);
        if (v.is_zero()) continue;
        bool clash = false;
        for (const auto& u : members) clash = clash || balgame::parallel(u, v);
        if (!clash) members.push_back(v);
    }
    return balgame::VectorFamily(dim, members);
}

} // namespace testing

#endif
