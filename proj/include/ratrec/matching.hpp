#pragma once

#include "ratrec/types.hpp"

#include <limits>
#include <vector>

namespace ratrec::detail {

/// Minimum-cost perfect assignment on a square cost matrix (Hungarian
/// algorithm with potentials, O(n^3)). Returns the column assigned to each
/// row.
template <typename Real>
std::vector<Index> min_cost_assignment(const rmatrix_t<Real>& cost)
{
    const Index n = cost.rows();
    if (cost.cols() != n)
        throw invalid_input("min_cost_assignment: cost matrix must be square");
    if (n == 0)
        return {};

    const Real inf = std::numeric_limits<Real>::infinity();
    std::vector<Real> u(n + 1, Real(0)), v(n + 1, Real(0));
    std::vector<Index> p(n + 1, 0), way(n + 1, 0);

    for (Index i = 1; i <= n; ++i) {
        p[0] = i;
        Index j0 = 0;
        std::vector<Real> minv(n + 1, inf);
        std::vector<char> used(n + 1, 0);
        do {
            used[j0] = 1;
            const Index i0 = p[j0];
            Index j1 = 0;
            Real delta = inf;
            for (Index j = 1; j <= n; ++j) {
                if (used[j])
                    continue;
                const Real cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (Index j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            const Index j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0 != 0);
    }

    std::vector<Index> row_to_col(n, -1);
    for (Index j = 1; j <= n; ++j)
        if (p[j] != 0)
            row_to_col[p[j] - 1] = j - 1;
    return row_to_col;
}

} // namespace ratrec::detail
