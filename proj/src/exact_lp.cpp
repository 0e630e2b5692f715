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

#include "exact_lp.hpp"

#include <cstddef>
#include <optional>

#include "balgame/error.hpp"

namespace balgame::lp {

namespace {

class Tableau {
public:
    Tableau(const Matrix& a, const std::vector<mpq_class>& b)
        : rows_(a.size()), cols_(rows_ ? a[0].size() : 0), t_(rows_, std::vector<mpq_class>(cols_ + rows_ + 1)),
          basis_(rows_), sign_(rows_, 1)
    {
        for (std::size_t r = 0; r < rows_; ++r) {
            if (a[r].size() != cols_) throw Error(ErrorKind::InvalidArgument, "ragged LP matrix");
            sign_[r] = b[r] < 0 ? -1 : 1;
            for (std::size_t j = 0; j < cols_; ++j) t_[r][j] = sign_[r] * a[r][j];
            t_[r][cols_ + r] = 1;
            t_[r].back() = sign_[r] * b[r];
            basis_[r] = cols_ + r;
        }
    }

    // Minimizes cost over the tableau; columns with !allowed[j] never enter.
    Status optimize(const std::vector<mpq_class>& cost, const std::vector<bool>& allowed)
    {
        const std::size_t total = cols_ + rows_;
        std::vector<mpq_class> reduced(total);
        auto refresh = [&] {
            for (std::size_t j = 0; j < total; ++j) {
                reduced[j] = cost[j];
                for (std::size_t r = 0; r < rows_; ++r)
                    if (sgn(t_[r][j]) != 0 && sgn(cost[basis_[r]]) != 0) reduced[j] -= cost[basis_[r]] * t_[r][j];
            }
        };
        refresh();
        while (true) {
            std::optional<std::size_t> enter;
            for (std::size_t j = 0; j < total; ++j)
                if (allowed[j] && reduced[j] < 0) {
                    enter = j;
                    break;
                }
            if (!enter) return Status::Optimal;
            std::optional<std::size_t> leave;
            mpq_class best;
            for (std::size_t r = 0; r < rows_; ++r) {
                if (t_[r][*enter] <= 0) continue;
                mpq_class ratio = t_[r].back() / t_[r][*enter];
                if (!leave || ratio < best || (ratio == best && basis_[r] < basis_[*leave])) {
                    leave = r;
                    best = ratio;
                }
            }
            if (!leave) return Status::Unbounded;
            pivot(*leave, *enter);
            const mpq_class rc = reduced[*enter];
            for (std::size_t j = 0; j < total; ++j)
                if (sgn(t_[*leave][j]) != 0) reduced[j] -= rc * t_[*leave][j];
        }
    }

    void pivot(std::size_t row, std::size_t col)
    {
        const mpq_class p = t_[row][col];
        for (auto& e : t_[row])
            if (sgn(e) != 0) e /= p;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == row || sgn(t_[r][col]) == 0) continue;
            const mpq_class factor = t_[r][col];
            for (std::size_t j = 0; j < t_[r].size(); ++j)
                if (sgn(t_[row][j]) != 0) t_[r][j] -= factor * t_[row][j];
        }
        basis_[row] = col;
    }

    // Pivots zero-level artificial variables out of the basis where possible.
    void expel_artificials()
    {
        for (std::size_t r = 0; r < rows_; ++r) {
            if (basis_[r] < cols_) continue;
            for (std::size_t j = 0; j < cols_; ++j)
                if (sgn(t_[r][j]) != 0) {
                    pivot(r, j);
                    break;
                }
        }
    }

    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::vector<mpq_class>> t_;
    std::vector<std::size_t> basis_;
    std::vector<int> sign_;
};

} // namespace

Result solve(const Matrix& a, const std::vector<mpq_class>& b, const std::vector<mpq_class>& c)
{
    if (a.size() != b.size()) throw Error(ErrorKind::InvalidArgument, "LP row count mismatch");
    Tableau tab(a, b);
    const std::size_t n = tab.cols_, m = tab.rows_;
    if (c.size() != n) throw Error(ErrorKind::InvalidArgument, "LP cost length mismatch");

    std::vector<mpq_class> phase1(n + m);
    for (std::size_t r = 0; r < m; ++r) phase1[n + r] = 1;
    std::vector<bool> allowed(n + m, true);
    tab.optimize(phase1, allowed);

    Result res;
    mpq_class infeasibility;
    for (std::size_t r = 0; r < m; ++r)
        if (tab.basis_[r] >= n) infeasibility += tab.t_[r].back();
    if (infeasibility > 0) {
        res.status = Status::Infeasible;
        return res;
    }

    tab.expel_artificials();
    std::vector<mpq_class> phase2(n + m);
    for (std::size_t j = 0; j < n; ++j) phase2[j] = c[j];
    for (std::size_t r = 0; r < m; ++r) allowed[n + r] = false;
    res.status = tab.optimize(phase2, allowed);
    if (res.status != Status::Optimal) return res;

    res.x.assign(n, 0);
    for (std::size_t r = 0; r < m; ++r)
        if (tab.basis_[r] < n) res.x[tab.basis_[r]] = tab.t_[r].back();
    res.value = 0;
    for (std::size_t j = 0; j < n; ++j) res.value += c[j] * res.x[j];

    // Artificial columns hold B^{-1} of the sign-adjusted system.
    res.duals.assign(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        mpq_class pi;
        for (std::size_t r = 0; r < m; ++r)
            if (tab.basis_[r] < n) pi += c[tab.basis_[r]] * tab.t_[r][n + i];
        res.duals[i] = tab.sign_[i] * pi;
    }
    return res;
}

} // namespace balgame::lp
