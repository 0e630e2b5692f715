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

// Dense two-phase simplex over GMP rationals. Internal to the library.

#ifndef BALGAME_EXACT_LP_HPP
#define BALGAME_EXACT_LP_HPP

#include <gmpxx.h>

#include <vector>

namespace balgame::lp {

using Matrix = std::vector<std::vector<mpq_class>>;

enum class Status { Optimal, Infeasible, Unbounded };

struct Result {
    Status status = Status::Infeasible;
    std::vector<mpq_class> x;     // primal solution
    std::vector<mpq_class> duals; // simplex multipliers, one per row
    mpq_class value;
};

/// min c.x subject to A x = b, x >= 0, with Bland's rule (terminates on degenerate problems).
Result solve(const Matrix& a, const std::vector<mpq_class>& b, const std::vector<mpq_class>& c);

} // namespace balgame::lp

#endif
