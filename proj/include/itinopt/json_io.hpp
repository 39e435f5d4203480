#pragma once

#include <string>

#include <json.hpp>

#include "itinopt/catalog.hpp"
#include "itinopt/types.hpp"

namespace itinopt {

using json = nlohmann::json;

// Field names follow the documented schemas exactly; object keys serialize
// in alphabetical order, which makes dumps canonical for a given value.

void to_json(json& j, const ObjectiveVector& v);
void from_json(const json& j, ObjectiveVector& v);

void to_json(json& j, const Itinerary& it);
void from_json(const json& j, Itinerary& it);

void to_json(json& j, const TravelOption& opt);
void from_json(const json& j, TravelOption& opt);

void to_json(json& j, const Segment& seg);
void from_json(const json& j, Segment& seg);

// Bare catalog object (no schema_version envelope).
void to_json(json& j, const Catalog& catalog);
void from_json(const json& j, Catalog& catalog);

void to_json(json& j, const AttributeRequirement& req);
void from_json(const json& j, AttributeRequirement& req);

void to_json(json& j, const ObjectiveWeights& w);
void from_json(const json& j, ObjectiveWeights& w);

void to_json(json& j, const Preferences& prefs);
void from_json(const json& j, Preferences& prefs); // validates and normalizes weights

void to_json(json& j, const GeneratorSpec& spec);
void from_json(const json& j, GeneratorSpec& spec);

// Parses text into JSON; throws Error(parse_error) with origin and position.
json parse_json_text(const std::string& text, const std::string& origin);

// Catalog file envelope: {"schema_version": 1, ...catalog fields...}.
json catalog_file_json(const Catalog& catalog);
Catalog catalog_from_file_json(const json& j, const std::string& origin);
Catalog catalog_from_json_text(const std::string& text, const std::string& origin);

// Converts nlohmann lookup/type errors into Error(schema_violation).
template <typename T>
T get_field(const json& j, const char* field, const std::string& context) {
    if (!j.is_object() || !j.contains(field)) {
        throw Error(Errc::schema_violation, context + ": missing field '" + field + "'");
    }
    try {
        return j.at(field).get<T>();
    } catch (const json::exception& e) {
        throw Error(Errc::schema_violation,
                    context + ": bad field '" + std::string(field) + "': " + e.what());
    }
}

} // namespace itinopt
