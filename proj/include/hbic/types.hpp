#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hbic/error.hpp"

namespace hbic {

using Index = std::int32_t;  // row / column positions
using Code = std::int32_t;   // discrete value codes (bin ids, category ids)

enum class AttributeType { Numeric, Binary, Categorical };

inline const char* to_string(AttributeType t) {
    switch (t) {
        case AttributeType::Numeric: return "numeric";
        case AttributeType::Binary: return "binary";
        case AttributeType::Categorical: return "categorical";
    }
    return "unknown";
}

inline AttributeType attribute_type_from(const std::string& s) {
    if (s == "numeric") return AttributeType::Numeric;
    if (s == "binary") return AttributeType::Binary;
    if (s == "categorical") return AttributeType::Categorical;
    raise(ErrorKind::ParseError, "unknown attribute type '" + s + "'");
}

// True for types whose cells are already discrete codes.
inline bool is_discrete(AttributeType t) { return t != AttributeType::Numeric; }

// One column of a mixed-type matrix.  Numeric columns keep raw doubles in
// `values`; binary/categorical columns keep integer codes in `codes` plus the
// code -> label dictionary in `labels` (codes are indices into it).
struct Column {
    std::string name;
    AttributeType type = AttributeType::Numeric;
    std::vector<double> values;       // numeric only
    std::vector<Code> codes;          // binary / categorical only
    std::vector<std::string> labels;  // binary / categorical only

    Index size() const {
        return static_cast<Index>(type == AttributeType::Numeric ? values.size() : codes.size());
    }
};

inline Column make_numeric_column(std::string name, std::vector<double> values) {
    Column c;
    c.name = std::move(name);
    c.type = AttributeType::Numeric;
    c.values = std::move(values);
    return c;
}

inline Column make_discrete_column(std::string name, AttributeType type, std::vector<Code> codes,
                                   std::vector<std::string> labels) {
    if (type == AttributeType::Numeric)
        raise(ErrorKind::InvalidArgument, "discrete column cannot have numeric type");
    if (type == AttributeType::Binary && labels.size() > 2)
        raise(ErrorKind::TypeViolation,
              "binary column '" + name + "' has " + std::to_string(labels.size()) + " labels");
    for (Code code : codes)
        if (code < 0 || static_cast<std::size_t>(code) >= labels.size())
            raise(ErrorKind::OutOfRange, "code out of range in column '" + name + "'");
    Column c;
    c.name = std::move(name);
    c.type = type;
    c.codes = std::move(codes);
    c.labels = std::move(labels);
    return c;
}

// Column-major mixed-type matrix.  All columns must agree on length.
class HeteroMatrix {
  public:
    HeteroMatrix() = default;

    explicit HeteroMatrix(std::vector<Column> columns) : columns_(std::move(columns)) {
        if (!columns_.empty()) {
            n_rows_ = columns_.front().size();
            for (const Column& c : columns_)
                if (c.size() != n_rows_)
                    raise(ErrorKind::SchemaMismatch, "column '" + c.name + "' has " +
                                                         std::to_string(c.size()) + " rows, expected " +
                                                         std::to_string(n_rows_));
        }
    }

    Index n_rows() const { return n_rows_; }
    Index n_cols() const { return static_cast<Index>(columns_.size()); }

    const Column& column(Index j) const {
        if (j < 0 || j >= n_cols()) raise(ErrorKind::OutOfRange, "column index " + std::to_string(j));
        return columns_[static_cast<std::size_t>(j)];
    }
    Column& column(Index j) {
        if (j < 0 || j >= n_cols()) raise(ErrorKind::OutOfRange, "column index " + std::to_string(j));
        return columns_[static_cast<std::size_t>(j)];
    }
    const std::vector<Column>& columns() const { return columns_; }

    double numeric_at(Index i, Index j) const {
        const Column& c = column(j);
        if (c.type != AttributeType::Numeric)
            raise(ErrorKind::TypeViolation, "column '" + c.name + "' is not numeric");
        check_row(i);
        return c.values[static_cast<std::size_t>(i)];
    }

    Code code_at(Index i, Index j) const {
        const Column& c = column(j);
        if (c.type == AttributeType::Numeric)
            raise(ErrorKind::TypeViolation, "column '" + c.name + "' is numeric, has no codes");
        check_row(i);
        return c.codes[static_cast<std::size_t>(i)];
    }

  private:
    void check_row(Index i) const {
        if (i < 0 || i >= n_rows_) raise(ErrorKind::OutOfRange, "row index " + std::to_string(i));
    }

    std::vector<Column> columns_;
    Index n_rows_ = 0;
};

// A bicluster is a set of row indices and a set of column indices, both kept
// sorted ascending and duplicate-free (the canonical form).
struct Bicluster {
    std::vector<Index> rows;
    std::vector<Index> cols;

    std::int64_t area() const {
        return static_cast<std::int64_t>(rows.size()) * static_cast<std::int64_t>(cols.size());
    }

    friend bool operator==(const Bicluster& a, const Bicluster& b) {
        return a.rows == b.rows && a.cols == b.cols;
    }
    // Lexicographic on (rows, cols); this is the canonical ordering used
    // everywhere a list of biclusters must be deterministic.
    friend bool operator<(const Bicluster& a, const Bicluster& b) {
        if (a.rows != b.rows) return a.rows < b.rows;
        return a.cols < b.cols;
    }
};

inline void sort_unique(std::vector<Index>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

inline Bicluster canonicalize(Bicluster b) {
    sort_unique(b.rows);
    sort_unique(b.cols);
    return b;
}

// Checks index bounds and non-emptiness against a concrete matrix shape.
inline void validate_bicluster(const Bicluster& b, Index n_rows, Index n_cols) {
    if (b.rows.empty() || b.cols.empty())
        raise(ErrorKind::EmptyBicluster, "bicluster has an empty row or column set");
    for (Index i : b.rows)
        if (i < 0 || i >= n_rows) raise(ErrorKind::OutOfRange, "bicluster row " + std::to_string(i));
    for (Index j : b.cols)
        if (j < 0 || j >= n_cols) raise(ErrorKind::OutOfRange, "bicluster column " + std::to_string(j));
}

struct QualityScore {
    double anv = 0.0;            // average normalized variance over numeric columns
    double acf = 0.0;            // average disagreement with the mode over discrete columns
    double hiv = 0.0;            // anv + acf; 0 means perfectly homogeneous
    double hiv_norm = 0.0;       // hiv min-max scaled over the candidate set
    std::int64_t size = 0;       // |rows| * |cols|
    double size_norm = 0.0;      // size / (n_rows * n_cols)
    double fitness = 0.0;        // blended, lower is better
};

enum class SelectionMode { All, BestBeta, DistanceGap, ParetoFront };

inline const char* to_string(SelectionMode m) {
    switch (m) {
        case SelectionMode::All: return "all";
        case SelectionMode::BestBeta: return "best";
        case SelectionMode::DistanceGap: return "dist";
        case SelectionMode::ParetoFront: return "pareto";
    }
    return "unknown";
}

inline SelectionMode selection_mode_from(const std::string& s) {
    if (s == "all") return SelectionMode::All;
    if (s == "best") return SelectionMode::BestBeta;
    if (s == "dist") return SelectionMode::DistanceGap;
    if (s == "pareto") return SelectionMode::ParetoFront;
    raise(ErrorKind::InvalidArgument, "unknown selection mode '" + s + "'");
}

// A scored bicluster as it appears in a final solution.
struct ScoredBicluster {
    Bicluster bicluster;
    QualityScore score;
};

struct BiclusterSolution {
    std::vector<ScoredBicluster> biclusters;

    // Echo of the run parameters, kept so a solution file is reproducible.
    int nbins = 0;
    Index rmin = 0;
    Index cmin = 0;
    double alpha = 0.5;
    SelectionMode select = SelectionMode::All;
    std::optional<int> beta;
    std::uint64_t seed = 0;
    std::int64_t n_candidates = 0;
};

}  // namespace hbic
