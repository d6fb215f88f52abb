#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "hbic/error.hpp"

namespace hbic {

// Maximum-weight assignment between rows and columns of a non-negative
// weight matrix (rectangular allowed; it is padded square with zeros, so the
// result equals the best partial matching of min(r, c) pairs).  Hungarian
// algorithm with potentials, O(n^3).
inline std::int64_t max_weight_assignment(const std::vector<std::vector<std::int64_t>>& w) {
    const std::size_t r = w.size();
    const std::size_t c = r ? w[0].size() : 0;
    if (r == 0 || c == 0) return 0;
    for (const auto& row : w) {
        if (row.size() != c) raise(ErrorKind::InvalidArgument, "weight matrix is ragged");
        for (std::int64_t x : row)
            if (x < 0) raise(ErrorKind::InvalidArgument, "assignment weights must be non-negative");
    }

    const std::size_t n = std::max(r, c);
    const std::int64_t INF = std::numeric_limits<std::int64_t>::max() / 4;
    // Minimize negated weights; pad with zeros (1-indexed).
    auto cost = [&](std::size_t i, std::size_t j) -> std::int64_t {
        return (i <= r && j <= c) ? -w[i - 1][j - 1] : 0;
    };

    std::vector<std::int64_t> u(n + 1, 0), v(n + 1, 0), minv(n + 1);
    std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        p[0] = i;
        std::size_t j0 = 0;
        minv.assign(n + 1, INF);
        std::vector<char> used(n + 1, 0);
        do {
            used[j0] = 1;
            std::size_t i0 = p[j0], j1 = 0;
            std::int64_t delta = INF;
            for (std::size_t j = 1; j <= n; ++j) {
                if (used[j]) continue;
                std::int64_t cur = cost(i0, j) - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= n; ++j) {
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
            std::size_t j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0);
    }

    std::int64_t total = 0;
    for (std::size_t j = 1; j <= n; ++j)
        if (p[j] >= 1 && p[j] <= r && j <= c) total += w[p[j] - 1][j - 1];
    return total;
}

}  // namespace hbic
