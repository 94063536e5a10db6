#include <chit/error.hpp>
#include <chit/graph_spec.hpp>
#include <chit/tables.hpp>

#include <doctest.h>

#include <sstream>

using namespace chit;

namespace {

const TableOptions no_oracle{false, 1.0};

std::vector<std::string> column(const std::string & csv, std::size_t index)
{
    std::vector<std::string> out;
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line))
        out.push_back(split_csv_line(line).at(index));
    return out;
}

std::vector<std::string> strings(std::initializer_list<int> v)
{
    std::vector<std::string> out;
    for (int x : v)
        out.push_back(std::to_string(x));
    return out;
}

}  // namespace

TEST_CASE("hypercube table bound columns")
{
    CHECK(column(render_table_csv("1a", no_oracle), 1) == strings({4, 4, 8, 7, 8, 8, 11, 11, 13, 13, 15, 15, 16, 16}));
    CHECK(column(render_table_csv("1b", no_oracle), 1) == strings({8, 8, 16, 13, 16, 16, 21, 21, 25, 25, 29, 29, 32}));
    const auto c = render_table_csv("1c", no_oracle);
    CHECK(column(c, 1) == strings({16, 16, 32, 43, 43, 57, 57, 79, 90, 102, 121, 127}));
    CHECK(column(c, 2)[5] == "52");  // n = 9
    const auto d = render_table_csv("1d", no_oracle);
    CHECK(column(d, 1) == strings({32, 32, 64, 86, 86, 114, 114, 158, 179, 203, 241}));
    CHECK(column(d, 2)[5] == "103");  // n = 10
}

TEST_CASE("Lee table bound columns")
{
    CHECK(column(render_table_csv("2a", no_oracle), 1) == strings({9, 8, 8, 8, 7, 8, 8}));
    CHECK(column(render_table_csv("2b", no_oracle), 1) == strings({27, 13, 16, 12, 14, 13, 13}));
    const auto c = column(render_table_csv("2c", no_oracle), 1);
    CHECK(c[0] == "degenerate");
    CHECK(std::vector<std::string>(c.begin() + 1, c.begin() + 6) == strings({32, 32, 27, 27, 25}));
    CHECK(column(render_table_csv("2d", no_oracle), 1) == strings({9, 11, 10, 9}));
}

TEST_CASE("CSV is byte-stable")
{
    for (const auto & id : table_ids())
        CHECK(render_table_csv(id, no_oracle) == render_table_csv(id, no_oracle));
    const auto csv = render_table_csv("2b", no_oracle);
    CHECK(csv.rfind("graph,closed_t3_regular,best_lb,best_lb_source,chi_3\n", 0) == 0);
    CHECK(csv.find("skipped") != std::string::npos);
}

TEST_CASE("every bound cell matches a single bound computation")
{
    for (const auto & id : table_ids()) {
        const auto spec = table_spec(id);
        for (const auto & row : spec.rows)
            for (const auto & col : spec.columns) {
                if (col.kind != ColumnKind::bound)
                    continue;
                const auto cell = table_cell(spec, row, col, no_oracle);
                if (cell == "degenerate" || cell == "n/a")
                    continue;
                CAPTURE(id);
                CAPTURE(row.label);
                CHECK(cell == std::to_string(compute_bound(GraphInstance(row.graph), spec.t, col.method).value));
            }
    }
}

TEST_CASE("oracle cells")
{
    const auto spec = table_spec("1a");
    const TableOptions opts{true, 10.0};
    const auto & oracle_col = spec.columns.back();
    CHECK(table_cell(spec, spec.rows[1], oracle_col, opts) == "4");  // n = 3
    CHECK(table_cell(spec, spec.rows[2], oracle_col, opts) == "8");  // n = 4

    const auto c = table_spec("2c");
    CHECK(table_cell(c, c.rows.back(), c.columns.back(), opts) == "time");  // 729 vertices
}

TEST_CASE("CSV quoting")
{
    CHECK(csv_field("G(3,5)") == "\"G(3,5)\"");
    CHECK(csv_field("plain") == "plain");
    CHECK(split_csv_line("\"G(3,5)\",16,,\"a \"\"b\"\"\"") == std::vector<std::string>{"G(3,5)", "16", "", "a \"b\""});
    CHECK(render_table_csv("2a", no_oracle).find("\n\"G(3,4)\",8,skipped\n") != std::string::npos);
}

TEST_CASE("external reference data")
{
    const auto spec = table_spec("2b");
    const auto & lb = spec.columns[1];
    const auto & src = spec.columns[2];
    CHECK(table_cell(spec, spec.rows[2], lb, no_oracle) == "18");
    CHECK(table_cell(spec, spec.rows[2], src, no_oracle).rfind("external: ", 0) == 0);
    CHECK(table_cell(spec, spec.rows[0], lb, no_oracle) == "N/A");
    CHECK_THROWS_AS(table_spec("9z"), InvalidParameter);
}
