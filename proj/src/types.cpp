#include "itinopt/types.hpp"

#include <cmath>
#include <limits>

namespace itinopt {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::ok: return "ok";
        case Errc::invalid_argument: return "invalid_argument";
        case Errc::invalid_spec: return "invalid_spec";
        case Errc::parse_error: return "parse_error";
        case Errc::schema_violation: return "schema_violation";
        case Errc::io_error: return "io_error";
        case Errc::index_out_of_range: return "index_out_of_range";
        case Errc::length_mismatch: return "length_mismatch";
        case Errc::insufficient_data: return "insufficient_data";
        case Errc::singular_design: return "singular_design";
        case Errc::no_feasible_solution: return "no_feasible_solution";
        case Errc::empty_front: return "empty_front";
        case Errc::invalid_start: return "invalid_start";
        case Errc::unknown_catalog: return "unknown_catalog";
        case Errc::optimizer_failed: return "optimizer_failed";
        case Errc::timeout: return "timeout";
        case Errc::topic_closed: return "topic_closed";
        case Errc::server_unreachable: return "server_unreachable";
        case Errc::internal: return "internal";
    }
    return "unknown";
}

const char* to_string(OptionKind kind) {
    switch (kind) {
        case OptionKind::flight: return "flight";
        case OptionKind::lodging: return "lodging";
        case OptionKind::ground: return "ground";
        case OptionKind::activity: return "activity";
    }
    return "flight";
}

OptionKind option_kind_from_string(const std::string& s) {
    if (s == "flight") return OptionKind::flight;
    if (s == "lodging") return OptionKind::lodging;
    if (s == "ground") return OptionKind::ground;
    if (s == "activity") return OptionKind::activity;
    throw Error(Errc::schema_violation, "unknown option kind '" + s + "'");
}

namespace {

bool finite_nonneg(double x) { return std::isfinite(x) && x >= 0.0; }

} // namespace

void Catalog::validate() const {
    std::map<std::string, int> ids;
    for (size_t i = 0; i < segments.size(); ++i) {
        const Segment& seg = segments[i];
        if (seg.index != static_cast<int>(i)) {
            throw Error(Errc::schema_violation,
                        "segment at position " + std::to_string(i) + " has index " +
                            std::to_string(seg.index) + " (expected contiguous 0-based indices)");
        }
        if (seg.options.empty()) {
            throw Error(Errc::schema_violation,
                        "segment " + std::to_string(i) + " ('" + seg.label + "') has no options");
        }
        for (const TravelOption& opt : seg.options) {
            if (opt.segment_index != seg.index) {
                throw Error(Errc::schema_violation, "option '" + opt.id + "' carries segment_index " +
                                                        std::to_string(opt.segment_index) +
                                                        " but lives in segment " +
                                                        std::to_string(seg.index));
            }
            if (!finite_nonneg(opt.cost) || !finite_nonneg(opt.duration) ||
                !finite_nonneg(opt.emissions)) {
                throw Error(Errc::schema_violation,
                            "option '" + opt.id + "' has a negative or non-finite numeric field");
            }
            if (opt.id.empty()) {
                throw Error(Errc::schema_violation,
                            "segment " + std::to_string(i) + " contains an option with empty id");
            }
            if (++ids[opt.id] > 1) {
                throw Error(Errc::schema_violation, "duplicate option id '" + opt.id + "'");
            }
        }
    }
}

size_t Catalog::total_combinations() const {
    size_t total = 1;
    for (const Segment& seg : segments) {
        size_t n = seg.options.size();
        if (n != 0 && total > std::numeric_limits<size_t>::max() / n) {
            return std::numeric_limits<size_t>::max();
        }
        total *= n;
    }
    return total;
}

void Preferences::validate_and_normalize() {
    if (!(budget > 0.0) || !std::isfinite(budget)) {
        throw Error(Errc::invalid_argument, "preferences: budget must be > 0");
    }
    if (!(max_time > 0.0) || !std::isfinite(max_time)) {
        throw Error(Errc::invalid_argument, "preferences: max_time must be > 0");
    }
    if (emissions_cap && (!std::isfinite(*emissions_cap) || *emissions_cap < 0.0)) {
        throw Error(Errc::invalid_argument, "preferences: emissions_cap must be finite and >= 0");
    }
    double w[3] = {objective_weights.w_cost, objective_weights.w_time,
                   objective_weights.w_emissions};
    double sum = 0.0;
    for (double v : w) {
        if (!std::isfinite(v) || v < 0.0) {
            throw Error(Errc::invalid_argument, "preferences: objective weights must be >= 0");
        }
        sum += v;
    }
    if (sum <= 0.0) {
        throw Error(Errc::invalid_argument, "preferences: objective weights must not all be 0");
    }
    objective_weights.w_cost = w[0] / sum;
    objective_weights.w_time = w[1] / sum;
    objective_weights.w_emissions = w[2] / sum;
}

ObjectiveVector evaluate(const Itinerary& itinerary, const Catalog& catalog) {
    if (itinerary.choices.size() != catalog.segments.size()) {
        throw Error(Errc::index_out_of_range,
                    "itinerary has " + std::to_string(itinerary.choices.size()) +
                        " choices for " + std::to_string(catalog.segments.size()) + " segments");
    }
    ObjectiveVector total;
    for (size_t i = 0; i < itinerary.choices.size(); ++i) {
        int c = itinerary.choices[i];
        const Segment& seg = catalog.segments[i];
        if (c < 0 || static_cast<size_t>(c) >= seg.options.size()) {
            throw Error(Errc::index_out_of_range,
                        "choice " + std::to_string(c) + " out of range for segment " +
                            std::to_string(i) + " (" + std::to_string(seg.options.size()) +
                            " options)");
        }
        const TravelOption& opt = seg.options[static_cast<size_t>(c)];
        total.cost += opt.cost;
        total.time += opt.duration;
        total.emissions += opt.emissions;
    }
    return total;
}

bool dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
    bool no_worse = a.cost <= b.cost && a.time <= b.time && a.emissions <= b.emissions;
    bool strictly = a.cost < b.cost || a.time < b.time || a.emissions < b.emissions;
    return no_worse && strictly;
}

bool requirement_applies(const AttributeRequirement& req, const TravelOption& option) {
    return option.kind == req.segment_kind;
}

bool requirement_satisfied(const AttributeRequirement& req, const TravelOption& option) {
    if (!requirement_applies(req, option)) return false;
    auto it = option.attributes.find(req.tag);
    return it != option.attributes.end() && it->second == req.value;
}

std::string requirement_label(const AttributeRequirement& req, bool hard) {
    std::string label = hard ? "required:" : "preferred:";
    label += to_string(req.segment_kind);
    label += ":";
    label += req.tag;
    label += "=";
    label += req.value;
    return label;
}

FeasibilityReport is_feasible(const Itinerary& itinerary, const Catalog& catalog,
                              const Preferences& prefs) {
    ObjectiveVector totals = evaluate(itinerary, catalog);
    FeasibilityReport report;

    auto check_bound = [&report](const char* name, double value, double bound) {
        if (value > bound) {
            report.violations.push_back({name, bound > 0.0 ? (value - bound) / bound : 1.0});
        }
    };
    check_bound("budget", totals.cost, prefs.budget);
    check_bound("max_time", totals.time, prefs.max_time);
    if (prefs.emissions_cap) check_bound("emissions_cap", totals.emissions, *prefs.emissions_cap);

    for (const AttributeRequirement& req : prefs.required_attributes) {
        int applicable = 0, violated = 0;
        for (size_t i = 0; i < itinerary.choices.size(); ++i) {
            const TravelOption& opt =
                catalog.segments[i].options[static_cast<size_t>(itinerary.choices[i])];
            if (!requirement_applies(req, opt)) continue;
            ++applicable;
            if (!requirement_satisfied(req, opt)) ++violated;
        }
        // A requirement with no applicable segment is vacuously satisfied.
        if (applicable > 0 && violated > 0) {
            report.violations.push_back({requirement_label(req, true),
                                         static_cast<double>(violated) /
                                             static_cast<double>(applicable)});
        }
    }

    for (const ConstraintViolation& v : report.violations) report.total_violation += v.excess;
    return report;
}

} // namespace itinopt
