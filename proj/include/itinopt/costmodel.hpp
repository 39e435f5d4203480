#pragma once

#include <array>
#include <vector>

#include "itinopt/catalog.hpp"
#include "itinopt/json_io.hpp"

namespace itinopt {

struct PricingContext {
    double days_to_departure = 30.0;
    int season_index = 0; // 0..3
    double demand_factor = 1.0;
    double distance = 0.0; // km

    bool operator==(const PricingContext&) const = default;
};

// The neutral context repricing ratios are taken against.
inline constexpr PricingContext kReferenceContext{30.0, 0, 1.0, 0.0};

// Linear price model over [1, days_to_departure, season_index, demand_factor, distance].
struct CostModel {
    std::array<double, 5> coefficients{};
    double residual_std = 0.0;
    int n_trained = 0;
};

// Closed-form least squares on the normal equations; retries with ridge
// lambda=1e-8 when the 5x5 system is near-singular.
// Throws Error(insufficient_data) for < 5 rows, Error(singular_design) when
// even the ridge-stabilized solve fails.
CostModel fit(const std::vector<CostHistoryRow>& history);

// max(0, coefficients . [1, ctx]); deterministic.
double predict(const CostModel& model, const PricingContext& ctx);

// Scales every option cost by predict(ctx) / predict(reference context).
// A non-positive reference prediction leaves the catalog unchanged.
Catalog reprice_catalog(const Catalog& catalog, const CostModel& model, const PricingContext& ctx);

double reprice_factor(const CostModel& model, const PricingContext& ctx);

void to_json(json& j, const PricingContext& ctx);
void from_json(const json& j, PricingContext& ctx);

void to_json(json& j, const CostModel& model);
void from_json(const json& j, CostModel& model);

} // namespace itinopt
