#pragma once

#include <chit/bounds.hpp>
#include <chit/leecodes.hpp>
#include <chit/oracle.hpp>
#include <chit/spectrum.hpp>

#include <json.hpp>

namespace chit {

/// Rounds to 12 significant digits so JSON output is stable across platforms.
double round_significant(double x, int digits = 12);

nlohmann::json to_json(const Spectrum & s);
nlohmann::json to_json(const BoundReport & r);
nlohmann::json to_json(const ChromaticResult & r);
nlohmann::json to_json(const IndependenceResult & r);
nlohmann::json to_json(const PerfectCodeVerdict & v);
nlohmann::json to_json(const PerfectionReport & r);

}  // namespace chit
