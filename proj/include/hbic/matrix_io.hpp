#pragma once

#include <charconv>
#include <cmath>
#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "hbic/error.hpp"
#include "hbic/types.hpp"

namespace hbic {

struct SchemaColumn {
    std::string name;
    AttributeType type = AttributeType::Numeric;
};

using Schema = std::vector<SchemaColumn>;

inline Schema parse_schema(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        raise(ErrorKind::ParseError, std::string("schema is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("columns") || !doc["columns"].is_array())
        raise(ErrorKind::ParseError, "schema must be an object with a 'columns' array");
    Schema schema;
    for (const auto& entry : doc["columns"]) {
        if (!entry.is_object() || !entry.contains("name") || !entry.contains("type") ||
            !entry["name"].is_string() || !entry["type"].is_string())
            raise(ErrorKind::ParseError, "each schema column needs string 'name' and 'type'");
        schema.push_back({entry["name"].get<std::string>(),
                          attribute_type_from(entry["type"].get<std::string>())});
    }
    for (std::size_t a = 0; a < schema.size(); ++a)
        for (std::size_t b = a + 1; b < schema.size(); ++b)
            if (schema[a].name == schema[b].name)
                raise(ErrorKind::SchemaMismatch, "duplicate column name '" + schema[a].name + "'");
    return schema;
}

inline Schema parse_schema(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_schema(buf.str());
}

inline std::string schema_to_json(const Schema& schema) {
    nlohmann::json cols = nlohmann::json::array();
    for (const SchemaColumn& c : schema)
        cols.push_back({{"name", c.name}, {"type", to_string(c.type)}});
    return nlohmann::json{{"columns", cols}}.dump(2) + "\n";
}

inline Schema schema_of(const HeteroMatrix& x) {
    Schema schema;
    for (const Column& c : x.columns()) schema.push_back({c.name, c.type});
    return schema;
}

namespace detail {

inline void split_fields(std::string_view line, std::vector<std::string_view>& out) {
    out.clear();
    std::size_t start = 0;
    while (true) {
        std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            out.push_back(line.substr(start));
            return;
        }
        out.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

inline bool is_missing_token(std::string_view tok) { return tok.empty() || tok == "NA"; }

inline double parse_double(std::string_view tok, Index row, const std::string& col) {
    double v = 0.0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last)
        raise(ErrorKind::TypeViolation, "row " + std::to_string(row) + ", column '" + col +
                                            "': '" + std::string(tok) + "' is not numeric");
    if (!std::isfinite(v))
        raise(ErrorKind::TypeViolation,
              "row " + std::to_string(row) + ", column '" + col + "': non-finite value");
    return v;
}

// Shortest decimal form that round-trips back to the same double.
inline std::string format_double(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc()) raise(ErrorKind::Internal, "double formatting failed");
    return std::string(buf, ptr);
}

}  // namespace detail

// Reads a headered CSV against a schema.  The CSV header fixes the column
// order; the schema supplies each column's type and must cover exactly the
// header names.  Discrete labels are coded by sorted label order, so the
// coding does not depend on row order.  No quoting: fields may not contain
// commas or newlines.  Empty and "NA" cells are rejected.
inline HeteroMatrix load_matrix(std::istream& csv, const Schema& schema) {
    std::vector<std::string> lines;
    for (std::string line; std::getline(csv, line);) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(std::move(line));
    }
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    if (lines.empty()) raise(ErrorKind::ParseError, "CSV input is empty");

    std::vector<std::string_view> header;
    detail::split_fields(lines.front(), header);

    std::unordered_map<std::string_view, const SchemaColumn*> by_name;
    for (const SchemaColumn& c : schema) by_name.emplace(c.name, &c);
    if (by_name.size() != header.size())
        raise(ErrorKind::SchemaMismatch, "schema has " + std::to_string(by_name.size()) +
                                             " columns, CSV header has " +
                                             std::to_string(header.size()));
    std::vector<const SchemaColumn*> order;
    for (std::string_view name : header) {
        auto it = by_name.find(name);
        if (it == by_name.end())
            raise(ErrorKind::SchemaMismatch, "CSV column '" + std::string(name) + "' not in schema");
        order.push_back(it->second);
        by_name.erase(it);  // also catches duplicated header names
    }

    const Index n_rows = static_cast<Index>(lines.size() - 1);
    const Index n_cols = static_cast<Index>(header.size());
    if (n_rows < 1) raise(ErrorKind::ParseError, "CSV has a header but no data rows");
    std::vector<std::vector<double>> numeric(static_cast<std::size_t>(n_cols));
    std::vector<std::vector<std::string>> raw(static_cast<std::size_t>(n_cols));
    for (Index j = 0; j < n_cols; ++j) {
        if (order[static_cast<std::size_t>(j)]->type == AttributeType::Numeric)
            numeric[static_cast<std::size_t>(j)].reserve(static_cast<std::size_t>(n_rows));
        else
            raw[static_cast<std::size_t>(j)].reserve(static_cast<std::size_t>(n_rows));
    }

    std::vector<std::string_view> fields;
    for (Index i = 0; i < n_rows; ++i) {
        detail::split_fields(lines[static_cast<std::size_t>(i) + 1], fields);
        if (static_cast<Index>(fields.size()) != n_cols)
            raise(ErrorKind::ParseError, "row " + std::to_string(i) + " has " +
                                             std::to_string(fields.size()) + " fields, expected " +
                                             std::to_string(n_cols));
        for (Index j = 0; j < n_cols; ++j) {
            std::string_view tok = fields[static_cast<std::size_t>(j)];
            const SchemaColumn& sc = *order[static_cast<std::size_t>(j)];
            if (detail::is_missing_token(tok))
                raise(ErrorKind::MissingValue,
                      "row " + std::to_string(i) + ", column '" + sc.name + "' is missing");
            if (sc.type == AttributeType::Numeric)
                numeric[static_cast<std::size_t>(j)].push_back(detail::parse_double(tok, i, sc.name));
            else
                raw[static_cast<std::size_t>(j)].emplace_back(tok);
        }
    }

    std::vector<Column> columns;
    columns.reserve(static_cast<std::size_t>(n_cols));
    for (Index j = 0; j < n_cols; ++j) {
        const SchemaColumn& sc = *order[static_cast<std::size_t>(j)];
        if (sc.type == AttributeType::Numeric) {
            columns.push_back(make_numeric_column(sc.name, std::move(numeric[static_cast<std::size_t>(j)])));
            continue;
        }
        std::vector<std::string> labels = raw[static_cast<std::size_t>(j)];
        std::sort(labels.begin(), labels.end());
        labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
        if (sc.type == AttributeType::Binary && labels.size() > 2)
            raise(ErrorKind::TypeViolation, "binary column '" + sc.name + "' has " +
                                                std::to_string(labels.size()) + " distinct values");
        std::unordered_map<std::string_view, Code> code_of;
        for (std::size_t k = 0; k < labels.size(); ++k)
            code_of.emplace(labels[k], static_cast<Code>(k));
        std::vector<Code> codes;
        codes.reserve(static_cast<std::size_t>(n_rows));
        for (const std::string& label : raw[static_cast<std::size_t>(j)])
            codes.push_back(code_of.at(label));
        columns.push_back(make_discrete_column(sc.name, sc.type, std::move(codes), std::move(labels)));
    }
    return HeteroMatrix(std::move(columns));
}

inline HeteroMatrix load_matrix(const std::string& csv_text, const Schema& schema) {
    std::istringstream in(csv_text);
    return load_matrix(in, schema);
}

// Writes the matrix back out in the same dialect load_matrix reads.  Numeric
// cells use the shortest round-tripping decimal form, so write -> load is the
// identity on values.
inline void write_csv(const HeteroMatrix& x, std::ostream& out) {
    const Index n_cols = x.n_cols();
    if (n_cols == 0) raise(ErrorKind::InvalidArgument, "cannot write a matrix with no columns");
    for (Index j = 0; j < n_cols; ++j) {
        const std::string& name = x.column(j).name;
        if (name.find(',') != std::string::npos || name.find('\n') != std::string::npos)
            raise(ErrorKind::InvalidArgument, "column name '" + name + "' cannot be written unquoted");
        out << (j ? "," : "") << name;
    }
    out << '\n';
    for (Index i = 0; i < x.n_rows(); ++i) {
        for (Index j = 0; j < n_cols; ++j) {
            if (j) out << ',';
            const Column& c = x.column(j);
            if (c.type == AttributeType::Numeric) {
                out << detail::format_double(c.values[static_cast<std::size_t>(i)]);
            } else {
                const std::string& label =
                    c.labels[static_cast<std::size_t>(c.codes[static_cast<std::size_t>(i)])];
                if (label.empty() || label == "NA" || label.find(',') != std::string::npos ||
                    label.find('\n') != std::string::npos)
                    raise(ErrorKind::InvalidArgument,
                          "label '" + label + "' cannot be written unquoted");
                out << label;
            }
        }
        out << '\n';
    }
}

inline std::string write_csv(const HeteroMatrix& x) {
    std::ostringstream out;
    write_csv(x, out);
    return out.str();
}

}  // namespace hbic
