#pragma once

#include <optional>
#include <vector>

#include "itinopt/json_io.hpp"
#include "itinopt/types.hpp"

namespace itinopt {

// Exhaustive-enumeration reference for desk-scale catalogs. Guarded by a
// combination cap so nobody points it at a real search space by accident.
inline constexpr size_t kOracleMaxCombinations = 2'000'000;

struct OracleEntry {
    Itinerary itinerary;
    ObjectiveVector objectives;
};

struct OracleResult {
    std::vector<OracleEntry> pareto_front;     // feasible non-dominated set, sorted by chromosome
    std::optional<OracleEntry> min_emissions;  // feasible minimum-emissions itinerary
    std::optional<OracleEntry> min_weighted;   // feasible minimum weighted-score itinerary
    size_t enumerated = 0;
    size_t feasible_count = 0;
};

// Walks every itinerary in the catalog, applying is_feasible under prefs.
// Throws Error(invalid_argument) past kOracleMaxCombinations.
OracleResult enumerate_exact(const Catalog& catalog, const Preferences& prefs);

void to_json(json& j, const OracleResult& result);

} // namespace itinopt
