#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "hbic/error.hpp"
#include "hbic/types.hpp"

namespace hbic {

// Equal-width bin of `t` over [lo, hi] split into `nbins` bins: the integer
// part of nbins*(t-lo)/(hi-lo), clamped so the top edge lands in the last
// bin.  A degenerate range (lo == hi) puts everything in bin 0.
inline Code bin_index(double t, double lo, double hi, int nbins) {
    if (nbins < 1) raise(ErrorKind::InvalidBins, "nbins must be positive, got " + std::to_string(nbins));
    if (t < lo || t > hi)
        raise(ErrorKind::OutOfRange, "value " + std::to_string(t) + " outside [" +
                                         std::to_string(lo) + ", " + std::to_string(hi) + "]");
    if (lo == hi) return 0;
    double scaled = static_cast<double>(nbins) * (t - lo) / (hi - lo);
    Code idx = static_cast<Code>(scaled);  // scaled >= 0, so truncation is floor
    return std::min(idx, static_cast<Code>(nbins - 1));
}

// Bin codes for one numeric column over its own [min, max] range.
inline std::vector<Code> discretize_column(const std::vector<double>& values, int nbins) {
    if (nbins < 2) raise(ErrorKind::InvalidBins, "nbins must be at least 2, got " + std::to_string(nbins));
    std::vector<Code> codes;
    codes.reserve(values.size());
    if (values.empty()) return codes;
    auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
    double lo = *lo_it, hi = *hi_it;
    for (double t : values) codes.push_back(bin_index(t, lo, hi, nbins));
    return codes;
}

// The all-discrete view of a mixed matrix: numeric columns are equal-width
// binned, discrete columns pass through unchanged.  `arity[j]` is one past
// the largest code in column j (categorical: the dictionary size; numeric:
// highest occupied bin + 1, which can sit below nbins).  `bin_edges[j]`
// holds the nbins+1 bin boundaries for numeric columns and is empty for
// discrete ones.
struct DiscreteMatrix {
    Index n_rows = 0;
    Index n_cols = 0;
    std::vector<std::vector<Code>> codes;  // column-major: codes[j][i]
    std::vector<Code> arity;
    std::vector<std::vector<double>> bin_edges;
};

inline DiscreteMatrix discretize_matrix(const HeteroMatrix& x, int nbins) {
    if (nbins < 2) raise(ErrorKind::InvalidBins, "nbins must be at least 2, got " + std::to_string(nbins));
    DiscreteMatrix d;
    d.n_rows = x.n_rows();
    d.n_cols = x.n_cols();
    d.codes.reserve(static_cast<std::size_t>(d.n_cols));
    d.arity.reserve(static_cast<std::size_t>(d.n_cols));
    d.bin_edges.reserve(static_cast<std::size_t>(d.n_cols));
    for (Index j = 0; j < d.n_cols; ++j) {
        const Column& c = x.column(j);
        std::vector<Code> codes;
        std::vector<double> edges;
        if (c.type == AttributeType::Numeric) {
            codes = discretize_column(c.values, nbins);
            if (!c.values.empty()) {
                auto [lo_it, hi_it] = std::minmax_element(c.values.begin(), c.values.end());
                double lo = *lo_it, hi = *hi_it;
                edges.reserve(static_cast<std::size_t>(nbins) + 1);
                for (int w = 0; w <= nbins; ++w)
                    edges.push_back(lo + static_cast<double>(w) * (hi - lo) / static_cast<double>(nbins));
            }
        } else {
            codes = c.codes;
        }
        Code arity = 0;
        for (Code code : codes) arity = std::max(arity, static_cast<Code>(code + 1));
        if (is_discrete(c.type)) arity = static_cast<Code>(c.labels.size());
        d.codes.push_back(std::move(codes));
        d.arity.push_back(arity);
        d.bin_edges.push_back(std::move(edges));
    }
    return d;
}

}  // namespace hbic
