#include <chit/report.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace chit {

double round_significant(double x, int digits)
{
    if (!std::isfinite(x) || x == 0.0)
        return x == 0.0 ? 0.0 : x;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    const double r = std::strtod(buf, nullptr);
    return r == 0.0 ? 0.0 : r;
}

nlohmann::json to_json(const Spectrum & s)
{
    auto out = nlohmann::json::array();
    for (const auto & e : s.entries())
        out.push_back({{"value", round_significant(e.value)}, {"multiplicity", e.multiplicity}});
    return out;
}

nlohmann::json to_json(const BoundReport & r)
{
    nlohmann::json j{{"graph", r.graph_id}, {"t", r.t}, {"method", std::string(to_string(r.method))}, {"value", r.value}};
    if (r.certificate) {
        const auto & c = *r.certificate;
        auto coeffs = nlohmann::json::array();
        for (double v : c.polynomial.coefficients())
            coeffs.push_back(round_significant(v));
        j["polynomial_coefficients"] = coeffs;
        j["W_p"] = round_significant(c.W_p);
        j["lambda_p"] = round_significant(c.lambda_p);
        j["plain"] = round_significant(c.bound_plain);
        j["floor_enhanced"] = c.bound_floor ? nlohmann::json(round_significant(*c.bound_floor)) : nlohmann::json();
        if (c.degenerate)
            j["degenerate"] = true;
    }
    else {
        for (const char * key : {"polynomial_coefficients", "W_p", "lambda_p", "plain", "floor_enhanced"})
            j[key] = nullptr;
    }
    return j;
}

nlohmann::json to_json(const ChromaticResult & r)
{
    nlohmann::json j{{"exact", r.exact}, {"lower", r.lower}, {"upper", r.upper}};
    j["value"] = r.exact ? nlohmann::json(r.upper) : nlohmann::json();
    j["status"] = r.exact ? "exact" : "timeout";
    j["coloring"] = r.witness.colors;
    return j;
}

nlohmann::json to_json(const IndependenceResult & r)
{
    nlohmann::json j{{"exact", r.exact}, {"lower", r.lower}, {"upper", r.upper}};
    j["value"] = r.exact ? nlohmann::json(r.lower) : nlohmann::json();
    j["status"] = r.exact ? "exact" : "timeout";
    j["vertices"] = r.vertices;
    return j;
}

nlohmann::json to_json(const PerfectCodeVerdict & v)
{
    return {{"exists", v.exists},
            {"radical", v.radical},
            {"radical_divides_q", v.radical_divides_q},
            {"divides_q_power_n", v.divides_q_power_n}};
}

nlohmann::json to_json(const PerfectionReport & r)
{
    return {{"packing_radius", r.packing_radius ? nlohmann::json(*r.packing_radius) : nlohmann::json()},
            {"covering_radius", r.covering_radius},
            {"perfect", r.perfect}};
}

}  // namespace chit
