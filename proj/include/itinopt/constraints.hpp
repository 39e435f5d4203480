#pragma once

#include <string>
#include <vector>

#include "itinopt/json_io.hpp"
#include "itinopt/types.hpp"

namespace itinopt {

enum class BoundKind { budget, max_time, emissions_cap };

const char* to_string(BoundKind kind);

struct Bound {
    BoundKind kind = BoundKind::budget;
    double value = 0.0;

    bool operator==(const Bound&) const = default;
};

struct AttributeConstraint {
    AttributeRequirement requirement;
    bool hard = false;

    bool operator==(const AttributeConstraint&) const = default;
};

// The compiled g_i(x) <= b_i set: numeric bounds plus attribute requirements.
struct ConstraintSet {
    std::vector<Bound> bounds; // at most one per BoundKind
    std::vector<AttributeConstraint> attribute_requirements;
};

ConstraintSet compile(const Preferences& prefs);

struct PruneResult {
    Catalog catalog;
    std::vector<std::string> diagnostics; // one entry per relaxed segment
};

// Drops options that violate hard attribute requirements for their kind, or
// whose solo cost/duration already busts the budget/max_time bound. A segment
// is never emptied: if the survivors would be empty, first the hard attribute
// filters and then the bound filters are relaxed for that segment, with a
// diagnostic per relaxation.
PruneResult prune(const Catalog& catalog, const ConstraintSet& cs);

struct PreferenceCheck {
    std::string preference;
    bool satisfied = false;

    bool operator==(const PreferenceCheck&) const = default;
};

struct MatchReport {
    int satisfied = 0;
    int total = 0;
    double rate = 0.0;
    std::vector<PreferenceCheck> per_preference;
};

// Fraction of the request's preferences the itinerary honors. The
// denominator counts every hard and soft attribute preference plus the
// budget and max_time bounds.
MatchReport matching_rate(const Itinerary& itinerary, const Catalog& catalog,
                          const Preferences& prefs);

void to_json(json& j, const MatchReport& report);
void from_json(const json& j, MatchReport& report);

} // namespace itinopt
