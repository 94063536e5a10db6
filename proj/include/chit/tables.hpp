#pragma once

#include <chit/bounds.hpp>
#include <chit/graph_spec.hpp>

#include <optional>
#include <string>
#include <vector>

namespace chit {

enum class ColumnKind { bound, oracle_chi, best_lb, best_lb_source };

struct TableColumn {
    std::string header;
    ColumnKind kind = ColumnKind::bound;
    BoundMethod method = BoundMethod::closed_t2_regular;
};

struct TableRow {
    std::string label;
    GraphSpec graph;
};

struct TableSpec {
    std::string id;
    int t = 2;
    std::string row_header;
    std::vector<TableRow> rows;
    std::vector<TableColumn> columns;
};

/// Reference lower bounds from external SDP/LP work, embedded as static data.
struct ExternalBound {
    std::string table_id;
    std::string graph;
    int value = 0;
    std::string citation;
};

const std::vector<std::string> & table_ids();
TableSpec table_spec(const std::string & id);
const std::vector<ExternalBound> & external_bounds();

struct TableOptions {
    bool run_oracle = true;
    double budget_seconds = 60.0;
};

/// Cell text: a bound value, "degenerate", "time", "N/A" or "n/a" (method inapplicable).
std::string table_cell(const TableSpec & spec, const TableRow & row, const TableColumn & column,
                       const TableOptions & options);

/// CSV with a header line; rows and columns in spec order. Fields holding a comma or a
/// quote are quoted, so labels such as G(3,5) stay one field.
std::string render_table_csv(const std::string & id, const TableOptions & options);

std::string csv_field(const std::string & text);
std::vector<std::string> split_csv_line(const std::string & line);

}  // namespace chit
