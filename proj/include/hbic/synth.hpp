#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "hbic/error.hpp"
#include "hbic/matrix_io.hpp"
#include "hbic/rng.hpp"
#include "hbic/types.hpp"

namespace hbic {

enum class BicKind { Numeric, Categorical, Mixed };

inline const char* to_string(BicKind k) {
    switch (k) {
        case BicKind::Numeric: return "numeric";
        case BicKind::Categorical: return "categorical";
        case BicKind::Mixed: return "mixed";
    }
    return "unknown";
}

struct SynthConfig {
    Index n_rows = 1000;
    Index n_cols = 500;
    double cat_fraction = 0.5;       // leading fraction of columns made categorical
    Index n_bics = 5;                // planted biclusters
    Index bic_rows = 50;
    Index bic_cols = 50;
    std::vector<BicKind> bic_kinds;  // empty: cycle numeric, categorical, mixed
    double noise_level = 0.0;        // fraction of cells resampled afterwards
    std::uint64_t seed = 0;
};

struct GroundTruth {
    std::vector<Bicluster> biclusters;
};

namespace detail {

constexpr char kAlphabet[] = "abcdefghij";  // the 10 categorical labels
constexpr int kAlphabetSize = 10;
constexpr double kNumericLo = -10.0;
constexpr double kNumericHi = 10.0;

// Raw picture of the matrix under construction: numeric cells as doubles,
// categorical cells as label characters.  Columns are finalized (label
// dictionaries built) only after planting and noise are done.
struct RawData {
    Index n_rows = 0;
    Index n_cols = 0;
    Index n_cat = 0;                            // columns [0, n_cat) are categorical
    std::vector<std::vector<double>> numeric;   // column-major; empty for cat columns
    std::vector<std::vector<char>> labels;      // column-major; empty for numeric columns
};

inline char random_label(SplitRng& rng) {
    return kAlphabet[rng.next_below(kAlphabetSize)];
}

inline double random_numeric(SplitRng& rng) { return rng.next_double(kNumericLo, kNumericHi); }

inline std::vector<BicKind> default_kinds(Index n_bics, Index n_cat, Index n_num) {
    std::vector<BicKind> kinds;
    kinds.reserve(static_cast<std::size_t>(n_bics));
    for (Index k = 0; k < n_bics; ++k) {
        if (n_cat == 0)
            kinds.push_back(BicKind::Numeric);
        else if (n_num == 0)
            kinds.push_back(BicKind::Categorical);
        else
            kinds.push_back(k % 3 == 0   ? BicKind::Numeric
                            : k % 3 == 1 ? BicKind::Categorical
                                         : BicKind::Mixed);
    }
    return kinds;
}

// Uniform k-subset of [0, n) by Floyd's algorithm; returned sorted.
inline std::vector<std::int64_t> sample_cells(std::int64_t n, std::int64_t k, SplitRng& rng) {
    std::unordered_set<std::int64_t> chosen;
    chosen.reserve(static_cast<std::size_t>(k));
    for (std::int64_t j = n - k; j < n; ++j) {
        std::int64_t t = static_cast<std::int64_t>(rng.next_below(static_cast<std::uint64_t>(j) + 1));
        if (!chosen.insert(t).second) chosen.insert(j);
    }
    std::vector<std::int64_t> cells(chosen.begin(), chosen.end());
    std::sort(cells.begin(), cells.end());
    return cells;
}

inline void resample_raw_cells(RawData& raw, double level, SplitRng rng) {
    std::int64_t total = static_cast<std::int64_t>(raw.n_rows) * static_cast<std::int64_t>(raw.n_cols);
    std::int64_t k = static_cast<std::int64_t>(level * static_cast<double>(total));
    k = std::min(k, total);
    if (k <= 0) return;
    SplitRng pick_rng = rng.split(0);
    SplitRng value_rng = rng.split(1);
    for (std::int64_t cell : sample_cells(total, k, pick_rng)) {
        Index i = static_cast<Index>(cell / raw.n_cols);
        Index j = static_cast<Index>(cell % raw.n_cols);
        if (j < raw.n_cat)
            raw.labels[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = random_label(value_rng);
        else
            raw.numeric[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
                random_numeric(value_rng);
    }
}

// Builds the final immutable matrix; categorical dictionaries come from the
// labels actually present, coded in sorted order exactly like the CSV loader
// would, so writing and reloading the matrix reproduces it bit-for-bit.
inline HeteroMatrix finalize_raw(const RawData& raw) {
    std::vector<Column> columns;
    columns.reserve(static_cast<std::size_t>(raw.n_cols));
    for (Index j = 0; j < raw.n_cols; ++j) {
        if (j < raw.n_cat) {
            const std::vector<char>& cells = raw.labels[static_cast<std::size_t>(j)];
            std::vector<char> present(cells);
            std::sort(present.begin(), present.end());
            present.erase(std::unique(present.begin(), present.end()), present.end());
            std::vector<std::string> dict;
            dict.reserve(present.size());
            for (char ch : present) dict.emplace_back(1, ch);
            std::vector<Code> codes;
            codes.reserve(cells.size());
            for (char ch : cells)
                codes.push_back(static_cast<Code>(
                    std::lower_bound(present.begin(), present.end(), ch) - present.begin()));
            columns.push_back(make_discrete_column("c" + std::to_string(j), AttributeType::Categorical,
                                                   std::move(codes), std::move(dict)));
        } else {
            columns.push_back(make_numeric_column("x" + std::to_string(j - raw.n_cat),
                                                  raw.numeric[static_cast<std::size_t>(j)]));
        }
    }
    return HeteroMatrix(std::move(columns));
}

inline RawData raw_from_matrix(const HeteroMatrix& x) {
    RawData raw;
    raw.n_rows = x.n_rows();
    raw.n_cols = x.n_cols();
    raw.numeric.resize(static_cast<std::size_t>(raw.n_cols));
    raw.labels.resize(static_cast<std::size_t>(raw.n_cols));
    Index n_cat = 0;
    for (Index j = 0; j < raw.n_cols; ++j) {
        const Column& c = x.column(j);
        if (c.type == AttributeType::Numeric) {
            raw.numeric[static_cast<std::size_t>(j)] = c.values;
        } else {
            if (j != n_cat)
                raise(ErrorKind::InvalidArgument, "categorical columns must precede numeric ones");
            std::vector<char>& cells = raw.labels[static_cast<std::size_t>(j)];
            cells.reserve(static_cast<std::size_t>(raw.n_rows));
            for (Code code : c.codes) {
                const std::string& label = c.labels[static_cast<std::size_t>(code)];
                if (label.size() != 1)
                    raise(ErrorKind::InvalidArgument, "expected single-letter labels, got '" + label + "'");
                cells.push_back(label[0]);
            }
            ++n_cat;
        }
    }
    raw.n_cat = n_cat;
    return raw;
}

}  // namespace detail

// Resamples a `level` fraction of cells (chosen uniformly without
// replacement over the whole matrix) from the background distribution of the
// cell's column type.  level 0 returns the input untouched.
inline HeteroMatrix apply_noise(const HeteroMatrix& x, double level, SplitRng rng) {
    if (level < 0.0 || level > 1.0)
        raise(ErrorKind::OutOfRange, "noise level must be in [0, 1], got " + std::to_string(level));
    if (level == 0.0) return x;
    detail::RawData raw = detail::raw_from_matrix(x);
    detail::resample_raw_cells(raw, level, rng);
    return detail::finalize_raw(raw);
}

struct SynthResult {
    HeteroMatrix matrix;
    Schema schema;
    GroundTruth truth;
};

// Builds the planted-bicluster benchmark: a uniform background (numeric in
// [-10, 10], categorical over a..j) whose leading ceil(cat_fraction * M)
// columns are categorical, with n_bics disjoint constant-per-column blocks
// planted in stacked row bands, then cell noise on top.  Fully determined by
// the config, including the seed.
inline SynthResult generate_dataset(const SynthConfig& cfg) {
    if (cfg.n_rows < 1 || cfg.n_cols < 1)
        raise(ErrorKind::InvalidArgument, "matrix dimensions must be positive");
    if (cfg.cat_fraction < 0.0 || cfg.cat_fraction > 1.0)
        raise(ErrorKind::InvalidArgument, "cat_fraction must be in [0, 1]");
    if (cfg.noise_level < 0.0 || cfg.noise_level > 1.0)
        raise(ErrorKind::InvalidArgument, "noise_level must be in [0, 1]");
    if (cfg.n_bics < 1) raise(ErrorKind::InvalidArgument, "need at least one planted bicluster");
    if (cfg.bic_rows < 1 || cfg.bic_cols < 1)
        raise(ErrorKind::InvalidArgument, "bicluster dimensions must be positive");
    if (!cfg.bic_kinds.empty() && static_cast<Index>(cfg.bic_kinds.size()) != cfg.n_bics)
        raise(ErrorKind::InvalidArgument, "bic_kinds must list one kind per planted bicluster");

    const Index n_cat = static_cast<Index>(
        std::ceil(cfg.cat_fraction * static_cast<double>(cfg.n_cols)));
    const Index n_num = cfg.n_cols - n_cat;
    if (static_cast<std::int64_t>(cfg.n_bics) * cfg.bic_rows > cfg.n_rows)
        raise(ErrorKind::InfeasiblePlacement,
              std::to_string(cfg.n_bics) + " blocks of " + std::to_string(cfg.bic_rows) +
                  " rows do not fit in " + std::to_string(cfg.n_rows));

    SplitRng root(cfg.seed);
    SplitRng background = root.split(0);
    SplitRng planted = root.split(1);
    SplitRng noise = root.split(2);

    detail::RawData raw;
    raw.n_rows = cfg.n_rows;
    raw.n_cols = cfg.n_cols;
    raw.n_cat = n_cat;
    raw.numeric.resize(static_cast<std::size_t>(cfg.n_cols));
    raw.labels.resize(static_cast<std::size_t>(cfg.n_cols));
    for (Index j = 0; j < cfg.n_cols; ++j) {
        SplitRng col_rng = background.split(static_cast<std::uint64_t>(j));
        if (j < n_cat) {
            std::vector<char>& cells = raw.labels[static_cast<std::size_t>(j)];
            cells.reserve(static_cast<std::size_t>(cfg.n_rows));
            for (Index i = 0; i < cfg.n_rows; ++i) cells.push_back(detail::random_label(col_rng));
        } else {
            std::vector<double>& cells = raw.numeric[static_cast<std::size_t>(j)];
            cells.reserve(static_cast<std::size_t>(cfg.n_rows));
            for (Index i = 0; i < cfg.n_rows; ++i) cells.push_back(detail::random_numeric(col_rng));
        }
    }

    std::vector<BicKind> kinds =
        cfg.bic_kinds.empty() ? detail::default_kinds(cfg.n_bics, n_cat, n_num) : cfg.bic_kinds;

    GroundTruth truth;
    Index cat_cursor = 0;        // next unused categorical column
    Index num_cursor = n_cat;    // next unused numeric column
    for (Index k = 0; k < cfg.n_bics; ++k) {
        std::vector<Index> cols;
        cols.reserve(static_cast<std::size_t>(cfg.bic_cols));
        for (Index c = 0; c < cfg.bic_cols; ++c) {
            bool take_cat = false;
            switch (kinds[static_cast<std::size_t>(k)]) {
                case BicKind::Numeric: take_cat = false; break;
                case BicKind::Categorical: take_cat = true; break;
                case BicKind::Mixed: take_cat = c % 2 == 0; break;
            }
            if (take_cat) {
                if (cat_cursor >= n_cat)
                    raise(ErrorKind::InfeasiblePlacement, "ran out of categorical columns to plant in");
                cols.push_back(cat_cursor++);
            } else {
                if (num_cursor >= cfg.n_cols)
                    raise(ErrorKind::InfeasiblePlacement, "ran out of numeric columns to plant in");
                cols.push_back(num_cursor++);
            }
        }

        std::vector<Index> rows;
        rows.reserve(static_cast<std::size_t>(cfg.bic_rows));
        for (Index r = 0; r < cfg.bic_rows; ++r) rows.push_back(k * cfg.bic_rows + r);

        SplitRng bic_rng = planted.split(static_cast<std::uint64_t>(k));
        for (Index j : cols) {
            if (j < n_cat) {
                char label = detail::random_label(bic_rng);
                for (Index i : rows) raw.labels[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = label;
            } else {
                double value = detail::random_numeric(bic_rng);
                for (Index i : rows)
                    raw.numeric[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = value;
            }
        }
        truth.biclusters.push_back(canonicalize({std::move(rows), std::move(cols)}));
    }

    detail::resample_raw_cells(raw, cfg.noise_level, noise);

    SynthResult result;
    result.matrix = detail::finalize_raw(raw);
    result.schema = schema_of(result.matrix);
    result.truth = std::move(truth);
    return result;
}

}  // namespace hbic
