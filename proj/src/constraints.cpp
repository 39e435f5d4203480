#include "itinopt/constraints.hpp"

#include <algorithm>
#include <limits>

namespace itinopt {

const char* to_string(BoundKind kind) {
    switch (kind) {
        case BoundKind::budget: return "budget";
        case BoundKind::max_time: return "max_time";
        case BoundKind::emissions_cap: return "emissions_cap";
    }
    return "budget";
}

ConstraintSet compile(const Preferences& prefs) {
    ConstraintSet cs;
    cs.bounds.push_back({BoundKind::budget, prefs.budget});
    cs.bounds.push_back({BoundKind::max_time, prefs.max_time});
    if (prefs.emissions_cap) cs.bounds.push_back({BoundKind::emissions_cap, *prefs.emissions_cap});
    for (const AttributeRequirement& req : prefs.required_attributes) {
        cs.attribute_requirements.push_back({req, true});
    }
    for (const AttributeRequirement& req : prefs.preferred_attributes) {
        cs.attribute_requirements.push_back({req, false});
    }
    return cs;
}

namespace {

double bound_value(const ConstraintSet& cs, BoundKind kind, double fallback) {
    for (const Bound& b : cs.bounds) {
        if (b.kind == kind) return b.value;
    }
    return fallback;
}

} // namespace

PruneResult prune(const Catalog& catalog, const ConstraintSet& cs) {
    constexpr double kNoBound = std::numeric_limits<double>::infinity();
    double budget = bound_value(cs, BoundKind::budget, kNoBound);
    double max_time = bound_value(cs, BoundKind::max_time, kNoBound);

    PruneResult result;
    result.catalog.seed = catalog.seed;
    result.catalog.segments.reserve(catalog.segments.size());

    for (const Segment& seg : catalog.segments) {
        auto passes_attrs = [&](const TravelOption& opt) {
            for (const AttributeConstraint& ac : cs.attribute_requirements) {
                if (!ac.hard || !requirement_applies(ac.requirement, opt)) continue;
                if (!requirement_satisfied(ac.requirement, opt)) return false;
            }
            return true;
        };
        auto passes_bounds = [&](const TravelOption& opt) {
            return opt.cost <= budget && opt.duration <= max_time;
        };

        Segment kept = seg;
        kept.options.clear();
        for (const TravelOption& opt : seg.options) {
            if (passes_attrs(opt) && passes_bounds(opt)) kept.options.push_back(opt);
        }
        if (kept.options.empty()) {
            // Relax the hard attribute filters first, then the bounds.
            for (const TravelOption& opt : seg.options) {
                if (passes_bounds(opt)) kept.options.push_back(opt);
            }
            if (kept.options.empty()) {
                kept.options = seg.options;
                result.diagnostics.push_back("segment " + std::to_string(seg.index) +
                                             " ('" + seg.label +
                                             "'): all filters relaxed, no option fits the bounds");
            } else {
                result.diagnostics.push_back("segment " + std::to_string(seg.index) + " ('" +
                                             seg.label +
                                             "'): hard attribute filters relaxed to avoid an "
                                             "empty segment");
            }
        }
        result.catalog.segments.push_back(std::move(kept));
    }
    return result;
}

MatchReport matching_rate(const Itinerary& itinerary, const Catalog& catalog,
                          const Preferences& prefs) {
    ObjectiveVector totals = evaluate(itinerary, catalog);

    MatchReport report;
    auto add = [&report](std::string label, bool ok) {
        report.per_preference.push_back({std::move(label), ok});
        ++report.total;
        if (ok) ++report.satisfied;
    };

    add("budget", totals.cost <= prefs.budget);
    add("max_time", totals.time <= prefs.max_time);

    auto attr_satisfied = [&](const AttributeRequirement& req) {
        // Satisfied when every applicable chosen option matches; vacuously
        // true when no chosen option is of the requirement's kind.
        for (size_t i = 0; i < itinerary.choices.size(); ++i) {
            const TravelOption& opt =
                catalog.segments[i].options[static_cast<size_t>(itinerary.choices[i])];
            if (requirement_applies(req, opt) && !requirement_satisfied(req, opt)) return false;
        }
        return true;
    };
    for (const AttributeRequirement& req : prefs.required_attributes) {
        add(requirement_label(req, true), attr_satisfied(req));
    }
    for (const AttributeRequirement& req : prefs.preferred_attributes) {
        add(requirement_label(req, false), attr_satisfied(req));
    }

    report.rate = report.total > 0
                      ? static_cast<double>(report.satisfied) / static_cast<double>(report.total)
                      : 1.0;
    return report;
}

void to_json(json& j, const MatchReport& report) {
    json per = json::array();
    for (const PreferenceCheck& check : report.per_preference) {
        per.push_back({{"preference", check.preference}, {"satisfied", check.satisfied}});
    }
    j = json{{"satisfied", report.satisfied},
             {"total", report.total},
             {"rate", report.rate},
             {"per_preference", std::move(per)}};
}

void from_json(const json& j, MatchReport& report) {
    j.at("satisfied").get_to(report.satisfied);
    j.at("total").get_to(report.total);
    j.at("rate").get_to(report.rate);
    report.per_preference.clear();
    for (const json& item : j.at("per_preference")) {
        report.per_preference.push_back(
            {item.at("preference").get<std::string>(), item.at("satisfied").get<bool>()});
    }
}

} // namespace itinopt
