#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "hbic/error.hpp"
#include "hbic/types.hpp"

namespace hbic {

namespace detail {

inline double population_variance(const std::vector<double>& values) {
    if (values.empty()) return 0.0;
    // A constant set has variance exactly 0; don't let the rounded mean turn
    // it into a denormal residue.
    if (std::all_of(values.begin(), values.end(), [&](double v) { return v == values.front(); }))
        return 0.0;
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(values.size());
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    return ss / static_cast<double>(values.size());
}

inline double population_variance(const std::vector<double>& column, const std::vector<Index>& rows) {
    if (rows.empty()) return 0.0;
    double first = column[static_cast<std::size_t>(rows.front())];
    if (std::all_of(rows.begin(), rows.end(),
                    [&](Index i) { return column[static_cast<std::size_t>(i)] == first; }))
        return 0.0;
    double mean = 0.0;
    for (Index i : rows) mean += column[static_cast<std::size_t>(i)];
    mean /= static_cast<double>(rows.size());
    double ss = 0.0;
    for (Index i : rows) {
        double d = column[static_cast<std::size_t>(i)] - mean;
        ss += d * d;
    }
    return ss / static_cast<double>(rows.size());
}

// Count of the most frequent code among the selected rows.
inline Index modal_count(const std::vector<Code>& column, const std::vector<Index>& rows,
                         Code arity) {
    std::vector<Index> counts(static_cast<std::size_t>(arity), 0);
    Index best = 0;
    for (Index i : rows) {
        Index c = ++counts[static_cast<std::size_t>(column[static_cast<std::size_t>(i)])];
        best = std::max(best, c);
    }
    return best;
}

}  // namespace detail

// Homogeneity of one bicluster, measured on the original mixed matrix.
// Numeric columns contribute their within-bicluster variance relative to the
// whole column's variance (a flat column contributes 0); discrete columns
// contribute the fraction of rows disagreeing with the column's mode inside
// the bicluster.  Both parts are averages over their column kind, so hiv is
// in [0, 2] and equals 0 exactly when every column is constant inside.
inline QualityScore score_bicluster(const HeteroMatrix& x, const Bicluster& b) {
    validate_bicluster(b, x.n_rows(), x.n_cols());
    double sum_nv = 0.0;
    int n_numeric = 0;
    double sum_cf = 0.0;
    int n_discrete = 0;
    for (Index j : b.cols) {
        const Column& c = x.column(j);
        if (c.type == AttributeType::Numeric) {
            double full = detail::population_variance(c.values);
            if (full > 0.0) sum_nv += detail::population_variance(c.values, b.rows) / full;
            ++n_numeric;
        } else {
            Index modal = detail::modal_count(c.codes, b.rows, static_cast<Code>(c.labels.size()));
            sum_cf += 1.0 - static_cast<double>(modal) / static_cast<double>(b.rows.size());
            ++n_discrete;
        }
    }
    QualityScore s;
    s.anv = n_numeric ? sum_nv / n_numeric : 0.0;
    s.acf = n_discrete ? sum_cf / n_discrete : 0.0;
    s.hiv = s.anv + s.acf;
    return s;
}

// Scores every candidate and blends homogeneity with size into a fitness in
// [0, 1], lower is better.  hiv is min-max scaled over the candidate set
// (all-equal collapses to 0); size is scaled by the whole matrix area, so
// larger biclusters are rewarded through the (1 - size_norm) term.
inline std::vector<QualityScore> fitness_batch(const HeteroMatrix& x,
                                               const std::vector<Bicluster>& candidates,
                                               double alpha) {
    if (alpha < 0.0 || alpha > 1.0)
        raise(ErrorKind::OutOfRange, "alpha must be in [0, 1], got " + std::to_string(alpha));
    if (candidates.empty()) raise(ErrorKind::EmptyCandidateSet, "no candidates to score");

    std::vector<QualityScore> scores;
    scores.reserve(candidates.size());
    for (const Bicluster& b : candidates) scores.push_back(score_bicluster(x, b));

    double lo = scores.front().hiv, hi = scores.front().hiv;
    for (const QualityScore& s : scores) {
        lo = std::min(lo, s.hiv);
        hi = std::max(hi, s.hiv);
    }
    const double span = hi - lo;
    const double total = static_cast<double>(x.n_rows()) * static_cast<double>(x.n_cols());
    for (std::size_t k = 0; k < candidates.size(); ++k) {
        QualityScore& s = scores[k];
        s.hiv_norm = span > 0.0 ? (s.hiv - lo) / span : 0.0;
        s.size = candidates[k].area();
        s.size_norm = static_cast<double>(s.size) / total;
        s.fitness = alpha * s.hiv_norm + (1.0 - alpha) * (1.0 - s.size_norm);
    }
    return scores;
}

}  // namespace hbic
