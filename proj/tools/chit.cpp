// chit: spectral bounds on distance-t chromatic numbers.

#include <chit/bounds.hpp>
#include <chit/error.hpp>
#include <chit/graph_spec.hpp>
#include <chit/leecodes.hpp>
#include <chit/lpopt.hpp>
#include <chit/oracle.hpp>
#include <chit/report.hpp>
#include <chit/tables.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 2;
constexpr int exit_numeric = 3;

double default_budget()
{
    if (const char * env = std::getenv("CHIT_BUDGET")) {
        char * end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && *end == '\0' && v > 0)
            return v;
        std::cerr << "chit: ignoring malformed CHIT_BUDGET=" << env << '\n';
    }
    return chit::default_oracle_budget;
}

void emit(const nlohmann::json & j, bool pretty)
{
    std::cout << (pretty ? j.dump(2) : j.dump()) << '\n';
}

/// Columns padded to equal width, quotes removed.
std::string align_csv(const std::string & csv)
{
    std::vector<std::vector<std::string>> cells;
    std::istringstream in(csv);
    std::string line;
    std::vector<std::size_t> width;
    while (std::getline(in, line)) {
        auto row = chit::split_csv_line(line);
        width.resize(std::max(width.size(), row.size()), 0);
        for (std::size_t i = 0; i < row.size(); ++i)
            width[i] = std::max(width[i], row[i].size());
        cells.push_back(std::move(row));
    }
    std::ostringstream out;
    for (const auto & row : cells) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << row[i];
            if (i + 1 < row.size())
                out << std::string(width[i] - row[i].size() + 2, ' ');
        }
        out << '\n';
    }
    return out.str();
}

void dump_lp(const chit::GraphInstance & g, int t, chit::BoundMethod method, const std::string & path)
{
    chit::LPProblem lp;
    if (method == chit::BoundMethod::lp_minor)
        lp = chit::minor_polynomial_lp(g.spectrum(), t);
    else if (method == chit::BoundMethod::lp_general) {
        const auto walks = g.walks(t);
        const auto best = chit::lp_general_ratio(g.spectrum(), walks, t);
        lp = chit::general_ratio_lp(g.spectrum(), walks, t, best.vertex, best.ell);
    }
    else
        throw chit::InvalidParameter("--dump-lp applies to lp_general and lp_minor only");
    std::ofstream out(path);
    if (!out)
        throw chit::InvalidParameter("cannot write " + path);
    chit::write_lp(out, lp);
}

}  // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"Spectral lower bounds on distance-t chromatic numbers"};
    app.require_subcommand(1);
    bool pretty = false;
    app.add_flag("--pretty", pretty, "Human-readable output");

    std::string graph_text;
    int t = 2;
    std::string method_name;
    std::string lp_path;
    auto * bound = app.add_subcommand("bound", "Compute one bound and print a JSON report");
    bound->add_option("graph", graph_text, "qn:<n> | lee:<n>:<q> | cycle:<q> | file:<path>")->required();
    bound->add_option("--t", t, "Distance parameter")->check(CLI::PositiveNumber);
    std::vector<std::string> method_names;
    for (auto m : chit::all_bound_methods())
        method_names.emplace_back(chit::to_string(m));
    bound->add_option("--method", method_name, "Bound method")->required()->check(CLI::IsMember(method_names));
    bound->add_option("--dump-lp", lp_path, "Write the LP (CPLEX LP format) for lp_general / lp_minor");
    bound->add_flag("--pretty", pretty, "Indented JSON");

    auto * spectrum = app.add_subcommand("spectrum", "Print the adjacency spectrum as JSON");
    spectrum->add_option("graph", graph_text, "Graph spec")->required();
    spectrum->add_flag("--pretty", pretty, "Indented JSON");

    std::string table_id;
    bool no_oracle = false;
    double budget = default_budget();
    auto * table = app.add_subcommand("table", "Render a bound table as CSV");
    table->add_option("table_id", table_id, "1a..1d, 2a..2d")->required()->check(CLI::IsMember(chit::table_ids()));
    table->add_flag("--no-oracle", no_oracle, "Skip the exact chi_t column");
    table->add_option("--budget", budget, "Oracle time budget per cell, seconds")->check(CLI::PositiveNumber);
    table->add_flag("--pretty", pretty, "Aligned columns");

    auto * lee = app.add_subcommand("lee", "Lee-code utilities");
    lee->require_subcommand(1);
    int lee_n = 1, lee_q = 2;
    auto * wprime = lee->add_subcommand("wprime", "Is -1 an eigenvalue of G(n,q)");
    wprime->add_option("n", lee_n)->required();
    wprime->add_option("q", lee_q)->required();
    auto * perfect = lee->add_subcommand("perfect", "Does a perfect distance-3 Lee code exist in A_q^n");
    perfect->add_option("n", lee_n)->required();
    perfect->add_option("q", lee_q)->required();
    std::string code_path;
    auto * validate = lee->add_subcommand("validate", "Minimum distance and perfection of a code file");
    validate->add_option("codefile", code_path)->required();
    for (auto * sc : {wprime, perfect, validate})
        sc->add_flag("--pretty", pretty, "Indented JSON");

    std::string which;
    auto * oracle = app.add_subcommand("oracle", "Exact chi_t or alpha_t with a time budget");
    oracle->add_option("graph", graph_text, "Graph spec")->required();
    oracle->add_option("which", which, "chi | alpha")->required()->check(CLI::IsMember({"chi", "alpha"}));
    oracle->add_option("--t", t, "Distance parameter")->check(CLI::PositiveNumber);
    oracle->add_option("--budget", budget, "Time budget, seconds")->check(CLI::PositiveNumber);
    oracle->add_flag("--pretty", pretty, "Indented JSON");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError & e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*bound) {
            const chit::GraphInstance g(chit::parse_graph_spec(graph_text));
            const auto method = *chit::parse_bound_method(method_name);
            const auto report = chit::compute_bound(g, t, method);
            if (!lp_path.empty())
                dump_lp(g, t, method, lp_path);
            emit(chit::to_json(report), pretty);
        }
        else if (*spectrum) {
            const chit::GraphInstance g(chit::parse_graph_spec(graph_text));
            emit(chit::to_json(g.spectrum()), pretty);
        }
        else if (*table) {
            const auto csv = chit::render_table_csv(table_id, {!no_oracle, budget});
            std::cout << (pretty ? align_csv(csv) : csv);
        }
        else if (*wprime) {
            emit({{"n", lee_n}, {"q", lee_q}, {"member", chit::w_prime_membership(lee_n, lee_q)}}, pretty);
        }
        else if (*perfect) {
            auto j = chit::to_json(chit::perfect_code_exists(lee_n, lee_q));
            j["n"] = lee_n;
            j["q"] = lee_q;
            emit(j, pretty);
        }
        else if (*validate) {
            const auto code = chit::read_lee_code_file(code_path);
            nlohmann::json j{{"n", code.n}, {"q", code.q}, {"size", code.codewords.size()}};
            j["min_distance"] = code.codewords.size() >= 2 ? nlohmann::json(chit::code_min_distance(code)) : nlohmann::json();
            try {
                j["perfection"] = chit::to_json(chit::perfection_report(code));
            }
            catch (const chit::TooLarge &) {
                j["perfection"] = nullptr;
            }
            emit(j, pretty);
        }
        else if (*oracle) {
            const chit::GraphInstance g(chit::parse_graph_spec(graph_text));
            const auto power = chit::graph_power(g.graph(), t);
            nlohmann::json j = which == "chi" ? chit::to_json(chit::exact_chromatic_number(power, budget))
                                              : chit::to_json(chit::exact_independence_number(power, budget));
            j["graph"] = g.spec().id();
            j["t"] = t;
            j["which"] = which;
            emit(j, pretty);
        }
    }
    catch (const chit::NumericFailure & e) {
        std::cerr << "chit: numeric failure: " << e.what() << '\n';
        return exit_numeric;
    }
    catch (const chit::Error & e) {
        std::cerr << "chit: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_ok;
}
