#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "itinopt/errors.hpp"

namespace itinopt {

enum class OptionKind { flight, lodging, ground, activity };

const char* to_string(OptionKind kind);
OptionKind option_kind_from_string(const std::string& s);

// One purchasable element of a trip: a flight, a night of lodging, a ground
// leg or an activity. cost/duration/emissions must be finite and >= 0.
struct TravelOption {
    std::string id;
    int segment_index = 0;
    OptionKind kind = OptionKind::flight;
    double cost = 0.0;
    double duration = 0.0;  // hours
    double emissions = 0.0; // kg CO2e
    std::map<std::string, std::string> attributes;

    bool operator==(const TravelOption&) const = default;
};

struct Segment {
    int index = 0;
    std::string label;
    std::vector<TravelOption> options; // non-empty

    bool operator==(const Segment&) const = default;
};

// The search space: ordered segments, each with its candidate options.
struct Catalog {
    std::vector<Segment> segments;
    uint64_t seed = 0; // generator seed, 0 if loaded from file

    // Throws Error(schema_violation) naming the offending segment/option.
    void validate() const;

    // Product of per-segment option counts, saturating at SIZE_MAX.
    size_t total_combinations() const;

    bool operator==(const Catalog&) const = default;
};

// One chosen option index per segment; the GA chromosome.
struct Itinerary {
    std::vector<int> choices;

    bool operator==(const Itinerary&) const = default;
    auto operator<=>(const Itinerary&) const = default;
};

struct ObjectiveVector {
    double cost = 0.0;
    double time = 0.0;
    double emissions = 0.0;

    bool operator==(const ObjectiveVector&) const = default;
};

// Hard or soft attribute condition on every chosen option of a segment kind.
struct AttributeRequirement {
    OptionKind segment_kind = OptionKind::flight;
    std::string tag;
    std::string value;

    bool operator==(const AttributeRequirement&) const = default;
};

struct ObjectiveWeights {
    double w_cost = 1.0 / 3.0;
    double w_time = 1.0 / 3.0;
    double w_emissions = 1.0 / 3.0;

    bool operator==(const ObjectiveWeights&) const = default;
};

struct Preferences {
    double budget = 0.0;   // > 0
    double max_time = 0.0; // > 0
    std::optional<double> emissions_cap;
    std::vector<AttributeRequirement> required_attributes;
    std::vector<AttributeRequirement> preferred_attributes;
    ObjectiveWeights objective_weights;

    // Checks invariants and normalizes weights to sum 1.
    // Throws Error(invalid_argument) on violation.
    void validate_and_normalize();

    bool operator==(const Preferences&) const = default;
};

// Sums the chosen options' (cost, duration, emissions).
// Throws Error(index_out_of_range) on an invalid choice.
ObjectiveVector evaluate(const Itinerary& itinerary, const Catalog& catalog);

// Pareto dominance under minimization: a <= b component-wise, < somewhere.
bool dominates(const ObjectiveVector& a, const ObjectiveVector& b);

struct ConstraintViolation {
    std::string constraint; // "budget", "max_time", "emissions_cap", "required:<kind>:<tag>=<value>"
    double excess = 0.0;    // normalized: (value - bound) / bound, or violated/applicable for attributes

    bool operator==(const ConstraintViolation&) const = default;
};

struct FeasibilityReport {
    std::vector<ConstraintViolation> violations;
    double total_violation = 0.0;

    bool feasible() const { return violations.empty(); }
};

// Does `option` fall under requirement `req` (same segment kind)?
bool requirement_applies(const AttributeRequirement& req, const TravelOption& option);
// Applies and the option carries the required tag=value.
bool requirement_satisfied(const AttributeRequirement& req, const TravelOption& option);

std::string requirement_label(const AttributeRequirement& req, bool hard);

FeasibilityReport is_feasible(const Itinerary& itinerary, const Catalog& catalog,
                              const Preferences& prefs);

} // namespace itinopt
