#pragma once

#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <utility>
#include <vector>

#include "hbic/error.hpp"
#include "hbic/rng.hpp"
#include "hbic/types.hpp"

namespace test {

// Runs `f`, expecting it to throw; reports which error kind it threw.
template <typename F>
hbic::ErrorKind kind_of(F&& f) {
    try {
        std::forward<F>(f)();
    } catch (const hbic::Error& e) {
        return e.kind();
    }
    FAIL("expected the call to raise an error");
    return hbic::ErrorKind::Internal;
}

inline hbic::Bicluster random_bicluster(hbic::SplitRng& rng, hbic::Index n_rows, hbic::Index n_cols) {
    hbic::Bicluster b;
    hbic::Index nr = static_cast<hbic::Index>(1 + rng.next_below(static_cast<std::uint64_t>(n_rows)));
    hbic::Index nc = static_cast<hbic::Index>(1 + rng.next_below(static_cast<std::uint64_t>(n_cols)));
    for (hbic::Index k = 0; k < nr; ++k)
        b.rows.push_back(static_cast<hbic::Index>(rng.next_below(static_cast<std::uint64_t>(n_rows))));
    for (hbic::Index k = 0; k < nc; ++k)
        b.cols.push_back(static_cast<hbic::Index>(rng.next_below(static_cast<std::uint64_t>(n_cols))));
    return hbic::canonicalize(b);
}

// A solution whose biclusters occupy disjoint row bands, so no cell belongs to
// two of them.  This mirrors planted ground truths; the agreement score is
// only guaranteed to stay within [0,1] for such solutions.
inline std::vector<hbic::Bicluster> random_disjoint_solution(hbic::SplitRng& rng,
                                                             hbic::Index n_rows,
                                                             hbic::Index n_cols,
                                                             std::size_t max_bics) {
    std::size_t n = 1 + rng.next_below(max_bics);
    hbic::Index band = n_rows / static_cast<hbic::Index>(n);
    std::vector<hbic::Bicluster> sol;
    for (std::size_t k = 0; k < n; ++k) {
        hbic::Bicluster b;
        hbic::Index lo = static_cast<hbic::Index>(k) * band;
        hbic::Index nr = static_cast<hbic::Index>(1 + rng.next_below(static_cast<std::uint64_t>(band)));
        for (hbic::Index r = 0; r < nr; ++r) b.rows.push_back(lo + r);
        for (hbic::Index c = 0; c < n_cols; ++c)
            if (rng.next_below(10) < 4) b.cols.push_back(c);
        if (b.cols.empty()) b.cols.push_back(static_cast<hbic::Index>(rng.next_below(static_cast<std::uint64_t>(n_cols))));
        sol.push_back(std::move(b));
    }
    return sol;
}

}  // namespace test
