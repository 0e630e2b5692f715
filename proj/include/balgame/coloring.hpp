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

#ifndef BALGAME_COLORING_HPP
#define BALGAME_COLORING_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "balgame/lattice.hpp"

namespace balgame {

enum class Color { Red, Blue };

/// An m-subset of {1, ..., 2m}, sorted.
using MSet = std::vector<std::size_t>;

/// The +-1 vector with +1 exactly at the elements of A.
LatticeVector incidence_vector(const MSet& a, std::size_t m);

MSet complement(const MSet& a, std::size_t m);

struct Coloring {
    std::size_t m = 0;
    std::map<MSet, Color> colors;
    // Per-element counts of Red and Blue sets containing it, 0-based element index.
    std::vector<std::int64_t> red;
    std::vector<std::int64_t> blue;
};

inline constexpr std::size_t kDefaultMaxColoringM = 8;

/// Colors every m-subset of [2m] from balanced middle-layer signs: A with 1 in A
/// is Red iff its sign is +1, and its complement takes the other color.
Coloring color_msets(std::size_t m, bool allow_large = false);

struct ColoringReport {
    std::size_t m = 0;
    bool complete = false;            // exactly the C(2m, m) m-subsets are colored
    bool complementary_ok = false;    // complements always differ
    bool tallies_match = false;       // stored tallies agree with the recount
    bool mod4_constant = false;       // R(i) - B(i) is the same mod 4 for all i
    std::vector<std::int64_t> red;    // recounted
    std::vector<std::int64_t> blue;
    std::vector<std::int64_t> diff;   // red - blue
    std::string defect_class;         // "balanced", "power-of-2 pattern" or "unbalanced"
    std::vector<std::size_t> plus_three_elements; // 1-based
    std::vector<std::string> violations;

    bool ok() const;
};

/// Recounts the tallies from the color map alone and checks the coloring's properties.
ColoringReport verify_coloring(const Coloring& c);

// Design file: one line per m-set, "1,2,3 R" or "1,2,3 B".
void write_design(std::ostream& out, const Coloring& c);
Coloring read_design(std::istream& in);

} // namespace balgame

#endif
