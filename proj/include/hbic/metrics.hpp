#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "hbic/assignment.hpp"
#include "hbic/error.hpp"
#include "hbic/types.hpp"

namespace hbic {

namespace detail {

// Both inputs sorted ascending and duplicate-free.
inline std::int64_t intersection_size(const std::vector<Index>& a, const std::vector<Index>& b) {
    std::int64_t n = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) {
            ++i;
        } else if (b[j] < a[i]) {
            ++j;
        } else {
            ++n;
            ++i;
            ++j;
        }
    }
    return n;
}

inline double jaccard(const std::vector<Index>& a, const std::vector<Index>& b) {
    std::int64_t inter = intersection_size(a, b);
    std::int64_t uni = static_cast<std::int64_t>(a.size()) + static_cast<std::int64_t>(b.size()) - inter;
    return uni ? static_cast<double>(inter) / static_cast<double>(uni) : 0.0;
}

enum class Axis { Rows, Cols };

inline const std::vector<Index>& pick(const Bicluster& b, Axis axis) {
    return axis == Axis::Rows ? b.rows : b.cols;
}

// Mean over `from` of the best Jaccard match found in `to`, along one axis.
inline double axis_match(const std::vector<Bicluster>& from, const std::vector<Bicluster>& to,
                         Axis axis) {
    double sum = 0.0;
    for (const Bicluster& a : from) {
        double best = 0.0;
        for (const Bicluster& b : to) best = std::max(best, jaccard(pick(a, axis), pick(b, axis)));
        sum += best;
    }
    return sum / static_cast<double>(from.size());
}

inline void check_nonempty(const std::vector<Bicluster>& a, const std::vector<Bicluster>& b) {
    if (a.empty() || b.empty())
        raise(ErrorKind::EmptySolution, "metrics need at least one bicluster on each side");
}

using BiclusterRefs = std::vector<const std::vector<Bicluster>*>;

// Distinct covered cells via a hashed (row, col) set.  Simple and exact;
// memory grows with the union size.
inline std::int64_t union_count_hashed(const BiclusterRefs& sets) {
    std::unordered_set<std::int64_t> cells;
    for (const std::vector<Bicluster>* set : sets)
        for (const Bicluster& b : *set)
            for (Index i : b.rows)
                for (Index j : b.cols)
                    cells.insert((static_cast<std::int64_t>(i) << 32) | static_cast<std::uint32_t>(j));
    return static_cast<std::int64_t>(cells.size());
}

// Distinct covered cells via one column bitset per touched row; the better
// shape when biclusters are wide.  Must agree with the hashed route exactly.
inline std::int64_t union_count_bitset(const BiclusterRefs& sets) {
    Index max_col = -1;
    for (const std::vector<Bicluster>* set : sets)
        for (const Bicluster& b : *set)
            if (!b.cols.empty()) max_col = std::max(max_col, b.cols.back());
    const std::size_t words = static_cast<std::size_t>(max_col + 1 + 63) / 64;
    std::unordered_map<Index, std::vector<std::uint64_t>> by_row;
    for (const std::vector<Bicluster>* set : sets)
        for (const Bicluster& b : *set)
            for (Index i : b.rows) {
                std::vector<std::uint64_t>& mask = by_row[i];
                if (mask.empty()) mask.assign(words, 0);
                for (Index j : b.cols)
                    mask[static_cast<std::size_t>(j) / 64] |= 1ull << (static_cast<std::size_t>(j) % 64);
            }
    std::int64_t total = 0;
    for (const auto& [row, mask] : by_row)
        for (std::uint64_t word : mask) total += std::popcount(word);
    return total;
}

inline std::int64_t union_count(const BiclusterRefs& sets) {
    std::int64_t covered = 0;  // with multiplicity; an upper bound on the union
    for (const std::vector<Bicluster>* set : sets)
        for (const Bicluster& b : *set) covered += b.area();
    return covered <= 1 << 16 ? union_count_hashed(sets) : union_count_bitset(sets);
}

}  // namespace detail

// Geometric mean of the row-wise and column-wise match scores of `found`
// against `reference`: how well each found bicluster lines up with its best
// counterpart.  1 means every found bicluster matches a reference one
// exactly on both axes.
inline double relevance(const std::vector<Bicluster>& found, const std::vector<Bicluster>& reference) {
    detail::check_nonempty(found, reference);
    return std::sqrt(detail::axis_match(found, reference, detail::Axis::Rows) *
                     detail::axis_match(found, reference, detail::Axis::Cols));
}

// Same measure taken from the reference side: how much of the reference set
// the found biclusters account for.
inline double recovery(const std::vector<Bicluster>& found, const std::vector<Bicluster>& reference) {
    return relevance(reference, found);
}

// Number of distinct matrix cells covered by any bicluster of the set(s).
inline std::int64_t union_cell_count(const std::vector<Bicluster>& set) {
    return detail::union_count({&set});
}

inline std::int64_t union_cell_count(const std::vector<Bicluster>& a, const std::vector<Bicluster>& b) {
    return detail::union_count({&a, &b});
}

// Best one-to-one pairing of biclusters across the two sets, scored by the
// number of shared cells per pair and summed.
inline std::int64_t dmax(const std::vector<Bicluster>& a, const std::vector<Bicluster>& b) {
    detail::check_nonempty(a, b);
    std::vector<std::vector<std::int64_t>> overlap(a.size(), std::vector<std::int64_t>(b.size(), 0));
    for (std::size_t x = 0; x < a.size(); ++x)
        for (std::size_t y = 0; y < b.size(); ++y)
            overlap[x][y] = detail::intersection_size(a[x].rows, b[y].rows) *
                            detail::intersection_size(a[x].cols, b[y].cols);
    return max_weight_assignment(overlap);
}

// Cell-level agreement between two biclusterings: the optimally paired
// shared cells over all covered cells.  1 means the sets tile the matrix
// identically; symmetric in its arguments.
inline double biclustering_error(const std::vector<Bicluster>& a, const std::vector<Bicluster>& b) {
    detail::check_nonempty(a, b);
    std::int64_t uni = union_cell_count(a, b);
    if (uni == 0) raise(ErrorKind::EmptyBicluster, "both biclusterings cover no cells");
    return static_cast<double>(dmax(a, b)) / static_cast<double>(uni);
}

struct MetricReport {
    double relevance = 0.0;
    double recovery = 0.0;
    double biclustering_error = 0.0;
};

inline MetricReport evaluate(const std::vector<Bicluster>& found,
                             const std::vector<Bicluster>& reference) {
    MetricReport r;
    r.relevance = relevance(found, reference);
    r.recovery = recovery(found, reference);
    r.biclustering_error = biclustering_error(found, reference);
    return r;
}

}  // namespace hbic
