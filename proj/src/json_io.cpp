#include "itinopt/json_io.hpp"

namespace itinopt {

void to_json(json& j, const ObjectiveVector& v) {
    j = json{{"cost", v.cost}, {"time", v.time}, {"emissions", v.emissions}};
}

void from_json(const json& j, ObjectiveVector& v) {
    j.at("cost").get_to(v.cost);
    j.at("time").get_to(v.time);
    j.at("emissions").get_to(v.emissions);
}

void to_json(json& j, const Itinerary& it) { j = json{{"choices", it.choices}}; }

void from_json(const json& j, Itinerary& it) { j.at("choices").get_to(it.choices); }

void to_json(json& j, const TravelOption& opt) {
    j = json{{"id", opt.id},
             {"segment_index", opt.segment_index},
             {"kind", to_string(opt.kind)},
             {"cost", opt.cost},
             {"duration", opt.duration},
             {"emissions", opt.emissions},
             {"attributes", opt.attributes}};
}

void from_json(const json& j, TravelOption& opt) {
    j.at("id").get_to(opt.id);
    j.at("segment_index").get_to(opt.segment_index);
    opt.kind = option_kind_from_string(j.at("kind").get<std::string>());
    j.at("cost").get_to(opt.cost);
    j.at("duration").get_to(opt.duration);
    j.at("emissions").get_to(opt.emissions);
    opt.attributes.clear();
    if (j.contains("attributes")) j.at("attributes").get_to(opt.attributes);
}

void to_json(json& j, const Segment& seg) {
    j = json{{"index", seg.index}, {"label", seg.label}, {"options", seg.options}};
}

void from_json(const json& j, Segment& seg) {
    j.at("index").get_to(seg.index);
    j.at("label").get_to(seg.label);
    j.at("options").get_to(seg.options);
}

void to_json(json& j, const Catalog& catalog) {
    j = json{{"segments", catalog.segments}, {"seed", catalog.seed}};
}

void from_json(const json& j, Catalog& catalog) {
    j.at("segments").get_to(catalog.segments);
    catalog.seed = j.value("seed", uint64_t{0});
}

void to_json(json& j, const AttributeRequirement& req) {
    j = json{{"segment_kind", to_string(req.segment_kind)}, {"tag", req.tag}, {"value", req.value}};
}

void from_json(const json& j, AttributeRequirement& req) {
    req.segment_kind = option_kind_from_string(j.at("segment_kind").get<std::string>());
    j.at("tag").get_to(req.tag);
    j.at("value").get_to(req.value);
}

void to_json(json& j, const ObjectiveWeights& w) {
    j = json{{"w_cost", w.w_cost}, {"w_time", w.w_time}, {"w_emissions", w.w_emissions}};
}

void from_json(const json& j, ObjectiveWeights& w) {
    j.at("w_cost").get_to(w.w_cost);
    j.at("w_time").get_to(w.w_time);
    j.at("w_emissions").get_to(w.w_emissions);
}

void to_json(json& j, const Preferences& prefs) {
    j = json{{"budget", prefs.budget},
             {"max_time", prefs.max_time},
             {"required_attributes", prefs.required_attributes},
             {"preferred_attributes", prefs.preferred_attributes},
             {"objective_weights", prefs.objective_weights}};
    if (prefs.emissions_cap) {
        j["emissions_cap"] = *prefs.emissions_cap;
    } else {
        j["emissions_cap"] = nullptr;
    }
}

void from_json(const json& j, Preferences& prefs) {
    j.at("budget").get_to(prefs.budget);
    j.at("max_time").get_to(prefs.max_time);
    prefs.emissions_cap.reset();
    if (j.contains("emissions_cap") && !j.at("emissions_cap").is_null()) {
        prefs.emissions_cap = j.at("emissions_cap").get<double>();
    }
    prefs.required_attributes.clear();
    prefs.preferred_attributes.clear();
    if (j.contains("required_attributes")) {
        j.at("required_attributes").get_to(prefs.required_attributes);
    }
    if (j.contains("preferred_attributes")) {
        j.at("preferred_attributes").get_to(prefs.preferred_attributes);
    }
    if (j.contains("objective_weights")) {
        j.at("objective_weights").get_to(prefs.objective_weights);
    } else {
        prefs.objective_weights = ObjectiveWeights{};
    }
    prefs.validate_and_normalize();
}

void to_json(json& j, const GeneratorSpec& spec) {
    j = json{{"seed", spec.seed},
             {"num_segments", spec.num_segments},
             {"options_per_segment", spec.options_per_segment},
             {"cost_range", {spec.cost_range.first, spec.cost_range.second}},
             {"duration_range", {spec.duration_range.first, spec.duration_range.second}},
             {"emissions_model", to_string(spec.emissions_model)},
             {"attribute_vocab", spec.attribute_vocab}};
}

void from_json(const json& j, GeneratorSpec& spec) {
    GeneratorSpec defaults = GeneratorSpec::defaults(j.value("seed", uint64_t{1}));
    spec = defaults;
    if (j.contains("num_segments")) j.at("num_segments").get_to(spec.num_segments);
    if (j.contains("options_per_segment")) {
        j.at("options_per_segment").get_to(spec.options_per_segment);
    }
    if (j.contains("cost_range")) {
        spec.cost_range = {j.at("cost_range").at(0).get<double>(),
                           j.at("cost_range").at(1).get<double>()};
    }
    if (j.contains("duration_range")) {
        spec.duration_range = {j.at("duration_range").at(0).get<double>(),
                               j.at("duration_range").at(1).get<double>()};
    }
    if (j.contains("emissions_model")) {
        spec.emissions_model = emissions_model_from_string(j.at("emissions_model").get<std::string>());
    }
    if (j.contains("attribute_vocab")) j.at("attribute_vocab").get_to(spec.attribute_vocab);
    spec.validate();
}

json parse_json_text(const std::string& text, const std::string& origin) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(Errc::parse_error, origin + ": " + e.what());
    }
}

json catalog_file_json(const Catalog& catalog) {
    json j = catalog;
    j["schema_version"] = 1;
    return j;
}

Catalog catalog_from_file_json(const json& j, const std::string& origin) {
    if (!j.is_object()) throw Error(Errc::schema_violation, origin + ": catalog must be an object");
    int version = get_field<int>(j, "schema_version", origin);
    if (version != 1) {
        throw Error(Errc::schema_violation,
                    origin + ": unsupported schema_version " + std::to_string(version));
    }
    Catalog catalog;
    try {
        j.get_to(catalog);
    } catch (const json::exception& e) {
        throw Error(Errc::schema_violation, origin + ": " + e.what());
    }
    try {
        catalog.validate();
    } catch (const Error& e) {
        throw Error(Errc::schema_violation, origin + ": " + e.what());
    }
    return catalog;
}

Catalog catalog_from_json_text(const std::string& text, const std::string& origin) {
    return catalog_from_file_json(parse_json_text(text, origin), origin);
}

} // namespace itinopt
