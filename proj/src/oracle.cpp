#include "itinopt/oracle.hpp"

#include <algorithm>
#include <limits>

#include "itinopt/nsga2.hpp"

namespace itinopt {

OracleResult enumerate_exact(const Catalog& catalog, const Preferences& prefs) {
    if (catalog.segments.empty()) {
        throw Error(Errc::invalid_argument, "cannot enumerate an empty catalog");
    }
    size_t combos = catalog.total_combinations();
    if (combos > kOracleMaxCombinations) {
        throw Error(Errc::invalid_argument,
                    "catalog has " + std::to_string(combos) +
                        " combinations; oracle cap is " + std::to_string(kOracleMaxCombinations));
    }

    OracleResult result;
    std::vector<OracleEntry> feasible;
    Itinerary current;
    current.choices.assign(catalog.segments.size(), 0);

    double best_emissions = std::numeric_limits<double>::infinity();
    double best_weighted = std::numeric_limits<double>::infinity();

    while (true) {
        ++result.enumerated;
        ObjectiveVector v = evaluate(current, catalog);
        if (is_feasible(current, catalog, prefs).feasible()) {
            ++result.feasible_count;
            feasible.push_back({current, v});
            if (v.emissions < best_emissions) {
                best_emissions = v.emissions;
                result.min_emissions = OracleEntry{current, v};
            }
            double w = weighted_score(prefs.objective_weights, v);
            if (w < best_weighted) {
                best_weighted = w;
                result.min_weighted = OracleEntry{current, v};
            }
        }

        // Odometer increment over the choice vector.
        size_t pos = 0;
        for (; pos < current.choices.size(); ++pos) {
            if (static_cast<size_t>(current.choices[pos] + 1) <
                catalog.segments[pos].options.size()) {
                ++current.choices[pos];
                break;
            }
            current.choices[pos] = 0;
        }
        if (pos == current.choices.size()) break;
    }

    for (const OracleEntry& a : feasible) {
        bool dominated = false;
        for (const OracleEntry& b : feasible) {
            if (dominates(b.objectives, a.objectives)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) result.pareto_front.push_back(a);
    }
    std::sort(result.pareto_front.begin(), result.pareto_front.end(),
              [](const OracleEntry& a, const OracleEntry& b) { return a.itinerary < b.itinerary; });
    return result;
}

void to_json(json& j, const OracleResult& result) {
    auto entry_json = [](const OracleEntry& e) {
        return json{{"itinerary", e.itinerary}, {"objectives", e.objectives}};
    };
    json front = json::array();
    for (const OracleEntry& e : result.pareto_front) front.push_back(entry_json(e));
    j = json{{"pareto_front", std::move(front)},
             {"enumerated", result.enumerated},
             {"feasible_count", result.feasible_count},
             {"min_emissions", result.min_emissions ? entry_json(*result.min_emissions) : json(nullptr)},
             {"min_weighted", result.min_weighted ? entry_json(*result.min_weighted) : json(nullptr)}};
}

} // namespace itinopt
