#include <chit/tables.hpp>

#include <chit/error.hpp>
#include <chit/oracle.hpp>

#include <algorithm>
#include <sstream>

namespace chit {

namespace {

TableRow hypercube_row(int n)
{
    GraphSpec g;
    g.kind = GraphSpec::Kind::hypercube;
    g.n = n;
    return {std::to_string(n), g};
}

TableRow lee_row(int n, int q)
{
    GraphSpec g;
    g.kind = GraphSpec::Kind::lee;
    g.n = n;
    g.q = q;
    return {"G(" + std::to_string(n) + "," + std::to_string(q) + ")", g};
}

TableSpec hypercube_table(std::string id, int t, int n_from, int n_to, std::vector<TableColumn> bounds)
{
    TableSpec s{std::move(id), t, "n", {}, std::move(bounds)};
    for (int n = n_from; n <= n_to; ++n)
        s.rows.push_back(hypercube_row(n));
    s.columns.push_back({"chi_" + std::to_string(t), ColumnKind::oracle_chi, {}});
    return s;
}

TableSpec lee_table(std::string id, int t, int n, int q_from, int q_to, TableColumn bound, bool best_lb)
{
    TableSpec s{std::move(id), t, "graph", {}, {std::move(bound)}};
    for (int q = q_from; q <= q_to; ++q)
        s.rows.push_back(lee_row(n, q));
    if (best_lb) {
        s.columns.push_back({"best_lb", ColumnKind::best_lb, {}});
        s.columns.push_back({"best_lb_source", ColumnKind::best_lb_source, {}});
    }
    s.columns.push_back({"chi_" + std::to_string(t), ColumnKind::oracle_chi, {}});
    return s;
}

const ExternalBound * find_external(const std::string & table, const std::string & graph)
{
    for (const auto & e : external_bounds())
        if (e.table_id == table && e.graph == graph)
            return &e;
    return nullptr;
}

}  // namespace

const std::vector<std::string> & table_ids()
{
    static const std::vector<std::string> ids{"1a", "1b", "1c", "1d", "2a", "2b", "2c", "2d"};
    return ids;
}

TableSpec table_spec(const std::string & id)
{
    using M = BoundMethod;
    const auto b = ColumnKind::bound;
    if (id == "1a")
        return hypercube_table(id, 2, 2, 15, {{"closed_t2_regular", b, M::closed_t2_regular}});
    if (id == "1b")
        return hypercube_table(id, 3, 3, 15, {{"closed_t3_regular", b, M::closed_t3_regular}});
    if (id == "1c")
        return hypercube_table(id, 4, 4, 15, {{"hypercube_t45", b, M::hypercube_t45}, {"ngo_lower", b, M::ngo_lower}});
    if (id == "1d")
        return hypercube_table(id, 5, 5, 15, {{"hypercube_t45", b, M::hypercube_t45}, {"ngo_lower", b, M::ngo_lower}});
    if (id == "2a")
        return lee_table(id, 2, 3, 3, 9, {"closed_t2_regular", b, M::closed_t2_regular}, false);
    if (id == "2b")
        return lee_table(id, 3, 3, 3, 9, {"closed_t3_regular", b, M::closed_t3_regular}, true);
    if (id == "2c")
        return lee_table(id, 4, 3, 3, 9, {"lp_minor", b, M::lp_minor}, true);
    if (id == "2d")
        return lee_table(id, 2, 4, 3, 6, {"closed_t2_regular", b, M::closed_t2_regular}, true);
    throw InvalidParameter("unknown table id `" + id + "`");
}

const std::vector<ExternalBound> & external_bounds()
{
    static const std::vector<ExternalBound> data{
        {"2b", "G(3,5)", 18, "Astola-Tabus 2013"},
        {"2b", "G(3,6)", 16, "Polak 2019"},
        {"2b", "G(3,7)", 17, "Polak 2019"},
        {"2c", "G(3,5)", 42, "Astola-Tabus 2013"},
        {"2c", "G(3,6)", 36, "Astola-Tabus 2013"},
        {"2c", "G(3,7)", 35, "Polak 2019"},
        {"2d", "G(4,5)", 11, "Polak 2019"},
        {"2d", "G(4,6)", 9, "Astola-Tabus 2013"},
    };
    return data;
}

std::string table_cell(const TableSpec & spec, const TableRow & row, const TableColumn & column,
                       const TableOptions & options)
{
    switch (column.kind) {
    case ColumnKind::best_lb: {
        const auto * e = find_external(spec.id, row.label);
        return e ? std::to_string(e->value) : "N/A";
    }
    case ColumnKind::best_lb_source: {
        const auto * e = find_external(spec.id, row.label);
        return e ? "external: " + e->citation : "";
    }
    case ColumnKind::oracle_chi: {
        if (!options.run_oracle)
            return "skipped";
        const GraphInstance g(row.graph);
        if (g.vertex_count() > chromatic_vertex_cap)
            return "time";
        const auto r = exact_chromatic_number(graph_power(g.graph(), spec.t), options.budget_seconds);
        return r.exact ? std::to_string(r.upper) : "time";
    }
    case ColumnKind::bound:
        break;
    }
    const GraphInstance g(row.graph);
    try {
        const auto r = compute_bound(g, spec.t, column.method);
        if (r.certificate && r.certificate->degenerate)
            return "degenerate";
        return std::to_string(r.value);
    }
    catch (const BoundInapplicable &) {
        return column.method == BoundMethod::lp_minor ? "degenerate" : "n/a";
    }
    catch (const OutOfRange &) {
        return "n/a";
    }
}

std::string csv_field(const std::string & text)
{
    if (text.find_first_of(",\"\n") == std::string::npos)
        return text;
    std::string out = "\"";
    for (char c : text) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + '"';
}

std::vector<std::string> split_csv_line(const std::string & line)
{
    std::vector<std::string> fields(1);
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"')
                fields.back() += line[++i];
            else if (c == '"')
                quoted = false;
            else
                fields.back() += c;
        }
        else if (c == '"')
            quoted = true;
        else if (c == ',')
            fields.emplace_back();
        else
            fields.back() += c;
    }
    return fields;
}

std::string render_table_csv(const std::string & id, const TableOptions & options)
{
    const auto spec = table_spec(id);
    std::ostringstream out;
    out << csv_field(spec.row_header);
    for (const auto & c : spec.columns)
        out << ',' << csv_field(c.header);
    out << '\n';
    for (const auto & row : spec.rows) {
        out << csv_field(row.label);
        for (const auto & c : spec.columns)
            out << ',' << csv_field(table_cell(spec, row, c, options));
        out << '\n';
    }
    return out.str();
}

}  // namespace chit
