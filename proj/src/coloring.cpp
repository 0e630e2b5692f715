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

#include "balgame/coloring.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "balgame/balance.hpp"
#include "balgame/error.hpp"
#include "balgame/threshold.hpp"

namespace balgame {

LatticeVector incidence_vector(const MSet& a, std::size_t m)
{
    if (a.size() != m) throw Error(ErrorKind::InvalidArgument, "set has " + std::to_string(a.size()) +
                                                                   " elements, expected " + std::to_string(m));
    LatticeVector v(2 * m);
    for (std::size_t i = 0; i < 2 * m; ++i) v[i] = -1;
    for (auto e : a) {
        if (e < 1 || e > 2 * m) throw Error(ErrorKind::InvalidArgument, "element " + std::to_string(e) + " out of range");
        if (v[e - 1] == 1) throw Error(ErrorKind::InvalidArgument, "repeated element " + std::to_string(e));
        v[e - 1] = 1;
    }
    return v;
}

MSet complement(const MSet& a, std::size_t m)
{
    MSet out;
    for (std::size_t e = 1; e <= 2 * m; ++e)
        if (!std::binary_search(a.begin(), a.end(), e)) out.push_back(e);
    return out;
}

namespace {

void tally(Coloring& c)
{
    c.red.assign(2 * c.m, 0);
    c.blue.assign(2 * c.m, 0);
    for (const auto& [set, color] : c.colors)
        for (auto e : set) {
            if (e < 1 || e > 2 * c.m) continue;
            (color == Color::Red ? c.red : c.blue)[e - 1]++;
        }
}

} // namespace

Coloring color_msets(std::size_t m, bool allow_large)
{
    if (m < 2) throw Error(ErrorKind::InvalidArgument, "color_msets needs m >= 2");
    if (m > kDefaultMaxColoringM && !allow_large)
        throw Error(ErrorKind::SizeLimit, "m > " + std::to_string(kDefaultMaxColoringM) + " needs allow_large");
    const auto b = balance_middle(2 * m);
    Coloring c;
    c.m = m;
    for (std::size_t k = 0; k < b.layer->size(); ++k) {
        const auto& v = (*b.layer)[k];
        MSet a;
        for (std::size_t i = 0; i < v.dim(); ++i)
            if (v[i] == 1) a.push_back(i + 1);
        const Color col = b.signs[k] > 0 ? Color::Red : Color::Blue;
        c.colors.emplace(complement(a, m), col == Color::Red ? Color::Blue : Color::Red);
        c.colors.emplace(std::move(a), col);
    }
    tally(c);
    return c;
}

bool ColoringReport::ok() const
{
    return complete && complementary_ok && tallies_match && mod4_constant && defect_class != "unbalanced" &&
           violations.empty();
}

ColoringReport verify_coloring(const Coloring& c)
{
    ColoringReport r;
    r.m = c.m;
    const std::size_t n = 2 * c.m;

    r.complete = true;
    for (const auto& [set, color] : c.colors) {
        bool good = set.size() == c.m && std::is_sorted(set.begin(), set.end()) &&
                    std::adjacent_find(set.begin(), set.end()) == set.end();
        for (auto e : set) good = good && e >= 1 && e <= n;
        if (!good) {
            r.complete = false;
            r.violations.push_back("malformed set in coloring");
        }
    }
    const auto expected = binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(c.m));
    if (static_cast<std::int64_t>(c.colors.size()) != expected) {
        r.complete = false;
        r.violations.push_back("colored " + std::to_string(c.colors.size()) + " sets, expected " +
                               std::to_string(expected));
    }

    r.complementary_ok = true;
    for (const auto& [set, color] : c.colors) {
        if (set.size() != c.m) continue;
        auto it = c.colors.find(complement(set, c.m));
        if (it == c.colors.end() || it->second == color) {
            r.complementary_ok = false;
            std::ostringstream os;
            for (std::size_t k = 0; k < set.size(); ++k) os << (k ? "," : "") << set[k];
            r.violations.push_back("complement of {" + os.str() + "} " +
                                   (it == c.colors.end() ? "is uncolored" : "has the same color"));
        }
    }

    r.red.assign(n, 0);
    r.blue.assign(n, 0);
    for (const auto& [set, color] : c.colors)
        for (auto e : set)
            if (e >= 1 && e <= n) (color == Color::Red ? r.red : r.blue)[e - 1]++;
    r.tallies_match = r.red == c.red && r.blue == c.blue;
    if (!r.tallies_match) r.violations.push_back("stored tallies disagree with the recount");

    r.diff.resize(n);
    for (std::size_t i = 0; i < n; ++i) r.diff[i] = r.red[i] - r.blue[i];
    r.mod4_constant = true;
    for (std::size_t i = 1; i < n; ++i)
        if (((r.diff[i] - r.diff[0]) % 4 + 4) % 4 != 0) r.mod4_constant = false;
    if (!r.mod4_constant) r.violations.push_back("R(i) - B(i) is not constant mod 4");

    const auto threes = std::count(r.diff.begin(), r.diff.end(), 3);
    const auto minus = std::count(r.diff.begin(), r.diff.end(), -1);
    for (std::size_t i = 0; i < n; ++i)
        if (r.diff[i] == 3) r.plus_three_elements.push_back(i + 1);
    if (std::all_of(r.diff.begin(), r.diff.end(), [](auto d) { return d == 0; }))
        r.defect_class = "balanced";
    else if (static_cast<std::size_t>(threes) * 2 == c.m && static_cast<std::size_t>(threes + minus) == n)
        r.defect_class = "power-of-2 pattern";
    else
        r.defect_class = "unbalanced";
    return r;
}

void write_design(std::ostream& out, const Coloring& c)
{
    for (const auto& [set, color] : c.colors) {
        for (std::size_t k = 0; k < set.size(); ++k) out << (k ? "," : "") << set[k];
        out << ' ' << (color == Color::Red ? 'R' : 'B') << '\n';
    }
}

Coloring read_design(std::istream& in)
{
    Coloring c;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream ls(line.substr(start));
        std::string members, color;
        if (!(ls >> members >> color) || (color != "R" && color != "B"))
            throw Error(ErrorKind::Parse, "design line " + std::to_string(lineno) + ": expected '1,2,3 R|B'");
        MSet set;
        std::istringstream ms(members);
        std::string tok;
        while (std::getline(ms, tok, ',')) {
            try {
                set.push_back(static_cast<std::size_t>(std::stoul(tok)));
            } catch (const std::exception&) {
                throw Error(ErrorKind::Parse, "design line " + std::to_string(lineno) + ": bad element '" + tok + "'");
            }
        }
        std::sort(set.begin(), set.end());
        if (c.m == 0) c.m = set.size();
        else if (set.size() != c.m)
            throw Error(ErrorKind::Parse, "design line " + std::to_string(lineno) + ": set size differs");
        if (!c.colors.emplace(std::move(set), color == "R" ? Color::Red : Color::Blue).second)
            throw Error(ErrorKind::Parse, "design line " + std::to_string(lineno) + ": repeated set");
    }
    tally(c);
    return c;
}

} // namespace balgame
