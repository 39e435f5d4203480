#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "itinopt/types.hpp"

namespace itinopt {

enum class EmissionsModel { independent, cost_anticorrelated };

const char* to_string(EmissionsModel model);
EmissionsModel emissions_model_from_string(const std::string& s);

// Synthetic catalog recipe. Attribute vocab keys are either "kind.tag"
// (applied to options of that kind only) or a bare tag (applied to all kinds).
struct GeneratorSpec {
    uint64_t seed = 1;
    int num_segments = 4;
    int options_per_segment = 6;
    std::pair<double, double> cost_range{80.0, 400.0};
    std::pair<double, double> duration_range{1.0, 12.0};
    EmissionsModel emissions_model = EmissionsModel::cost_anticorrelated;
    std::map<std::string, std::vector<std::string>> attribute_vocab;

    void validate() const; // throws Error(invalid_spec)

    // Desk-scale default: 4 segments x 6 options (1296 itineraries) with the
    // stock attribute vocabulary, emissions anticorrelated with cost.
    static GeneratorSpec defaults(uint64_t seed);
};

// Emissions are drawn from this fixed range; the spec has no knob for it.
inline constexpr double kEmissionsLow = 10.0;
inline constexpr double kEmissionsHigh = 200.0;

// Deterministic per spec.seed (SplitMix64 throughout).
Catalog generate_catalog(const GeneratorSpec& spec);

// Green rule: an option is green iff its emissions are at or below the 25th
// percentile of its segment (nearest-rank index floor((n-1)/4) of the sorted
// emissions).
double green_threshold(const Segment& segment);
bool is_green(const Segment& segment, int option_index);

struct CostHistoryRow {
    double days_to_departure = 0.0;
    int season_index = 0; // 0..3
    double demand_factor = 0.0;
    double distance = 0.0; // km
    double observed_price = 0.0;

    bool operator==(const CostHistoryRow&) const = default;
};

// observed_price = coeffs . [1, days, season, demand, distance] + N(0, noise_std),
// clamped at 0. Deterministic per seed.
std::vector<CostHistoryRow> generate_cost_history(uint64_t seed, int n_rows,
                                                  const std::array<double, 5>& true_coefficients,
                                                  double noise_std = 5.0);

// CSV with header days_to_departure,season_index,demand_factor,distance,observed_price
void save_cost_history_csv(const std::vector<CostHistoryRow>& rows, const std::string& path);
std::vector<CostHistoryRow> load_cost_history_csv(const std::string& path);

Catalog load_catalog(const std::string& path);
void save_catalog(const Catalog& catalog, const std::string& path);

} // namespace itinopt
