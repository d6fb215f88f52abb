#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "hbic/discretize.hpp"
#include "hbic/error.hpp"
#include "hbic/types.hpp"

namespace hbic {

// A (column, code) pair that starts one growth run.
struct Seed {
    Index col = 0;
    Code code = 0;
};

struct ColumnPick {
    Index col = 0;
    Code code = 0;
    Index count = 0;  // rows among the current ones that carry `code` in `col`
};

// Among unused columns, find the one whose most frequent code covers the most
// of the current rows.  Ties break toward the smallest column index, then the
// smallest code, which keeps growth deterministic.
inline ColumnPick add_column(const DiscreteMatrix& d, const std::vector<Index>& rows,
                             const std::vector<char>& used, std::vector<Index>& counts_scratch) {
    if (rows.empty()) raise(ErrorKind::EmptyBicluster, "cannot extend an empty row set");
    std::optional<ColumnPick> best;
    for (Index j = 0; j < d.n_cols; ++j) {
        if (used[static_cast<std::size_t>(j)]) continue;
        const std::vector<Code>& col = d.codes[static_cast<std::size_t>(j)];
        const Code arity = d.arity[static_cast<std::size_t>(j)];
        counts_scratch.assign(static_cast<std::size_t>(arity), 0);
        for (Index i : rows) ++counts_scratch[static_cast<std::size_t>(col[static_cast<std::size_t>(i)])];
        Code mode_code = 0;
        Index mode_count = 0;
        for (Code v = 0; v < arity; ++v) {
            if (counts_scratch[static_cast<std::size_t>(v)] > mode_count) {
                mode_count = counts_scratch[static_cast<std::size_t>(v)];
                mode_code = v;
            }
        }
        if (!best || mode_count > best->count) best = ColumnPick{j, mode_code, mode_count};
    }
    if (!best) raise(ErrorKind::NoColumnLeft, "all columns are already in the bicluster");
    return *best;
}

// Grows one candidate from a seed: start with every row carrying the seed
// code, then repeatedly adopt the best remaining column, shrinking the row
// set to that column's modal code.  A step is kept only if it strictly
// increases area (rows x cols); otherwise growth stops.
inline Bicluster grow(const DiscreteMatrix& d, Seed seed) {
    const std::vector<Code>& seed_col = d.codes[static_cast<std::size_t>(seed.col)];
    std::vector<Index> rows;
    for (Index i = 0; i < d.n_rows; ++i)
        if (seed_col[static_cast<std::size_t>(i)] == seed.code) rows.push_back(i);
    if (rows.empty())
        raise(ErrorKind::EmptySeed, "code " + std::to_string(seed.code) + " absent from column " +
                                        std::to_string(seed.col));

    std::vector<Index> cols{seed.col};
    std::vector<char> used(static_cast<std::size_t>(d.n_cols), 0);
    used[static_cast<std::size_t>(seed.col)] = 1;
    std::vector<Index> counts_scratch;

    while (static_cast<Index>(cols.size()) < d.n_cols) {
        ColumnPick pick = add_column(d, rows, used, counts_scratch);
        std::int64_t grown_area =
            static_cast<std::int64_t>(pick.count) * static_cast<std::int64_t>(cols.size() + 1);
        std::int64_t area = static_cast<std::int64_t>(rows.size()) * static_cast<std::int64_t>(cols.size());
        if (grown_area <= area) break;
        const std::vector<Code>& col = d.codes[static_cast<std::size_t>(pick.col)];
        std::vector<Index> kept;
        kept.reserve(static_cast<std::size_t>(pick.count));
        for (Index i : rows)
            if (col[static_cast<std::size_t>(i)] == pick.code) kept.push_back(i);
        rows = std::move(kept);
        cols.push_back(pick.col);
        used[static_cast<std::size_t>(pick.col)] = 1;
    }
    return canonicalize({std::move(rows), std::move(cols)});
}

// All seeds of a discrete matrix: one per (column, code) pair that actually
// occurs, ordered by column then code.
inline std::vector<Seed> enumerate_seeds(const DiscreteMatrix& d) {
    std::vector<Seed> seeds;
    std::vector<char> present;
    for (Index j = 0; j < d.n_cols; ++j) {
        present.assign(static_cast<std::size_t>(d.arity[static_cast<std::size_t>(j)]), 0);
        for (Code v : d.codes[static_cast<std::size_t>(j)]) present[static_cast<std::size_t>(v)] = 1;
        for (Code v = 0; v < d.arity[static_cast<std::size_t>(j)]; ++v)
            if (present[static_cast<std::size_t>(v)]) seeds.push_back({j, v});
    }
    return seeds;
}

// Stage one: grow a candidate from every seed, drop the ones below the size
// floor, and deduplicate.  Growth runs are independent, so they are spread
// over `threads` workers; results land in slots indexed by seed, which makes
// the outcome identical for any thread count.
inline std::vector<Bicluster> generate_candidates(const DiscreteMatrix& d, Index rmin, Index cmin,
                                                  int threads = 1) {
    if (rmin < 1 || cmin < 1)
        raise(ErrorKind::InvalidArgument, "size floors must be at least 1");
    std::vector<Seed> seeds = enumerate_seeds(d);
    std::vector<Bicluster> grown(seeds.size());

    if (threads < 1) threads = 1;
    threads = std::min<int>(threads, static_cast<int>(seeds.size()) > 0 ? static_cast<int>(seeds.size()) : 1);
    if (threads <= 1) {
        for (std::size_t k = 0; k < seeds.size(); ++k) grown[k] = grow(d, seeds[k]);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (;;) {
                std::size_t k = next.fetch_add(1);
                if (k >= seeds.size()) break;
                grown[k] = grow(d, seeds[k]);
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }

    std::vector<Bicluster> candidates;
    candidates.reserve(grown.size());
    for (Bicluster& b : grown)
        if (static_cast<Index>(b.rows.size()) >= rmin && static_cast<Index>(b.cols.size()) >= cmin)
            candidates.push_back(std::move(b));
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    return candidates;
}

}  // namespace hbic
