#include "itinopt/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "itinopt/json_io.hpp"
#include "itinopt/rng.hpp"

namespace itinopt {

const char* to_string(EmissionsModel model) {
    return model == EmissionsModel::independent ? "independent" : "cost_anticorrelated";
}

EmissionsModel emissions_model_from_string(const std::string& s) {
    if (s == "independent") return EmissionsModel::independent;
    if (s == "cost_anticorrelated") return EmissionsModel::cost_anticorrelated;
    throw Error(Errc::invalid_spec, "unknown emissions model '" + s + "'");
}

void GeneratorSpec::validate() const {
    if (num_segments < 1) throw Error(Errc::invalid_spec, "num_segments must be >= 1");
    if (options_per_segment < 2) throw Error(Errc::invalid_spec, "options_per_segment must be >= 2");
    if (!(cost_range.first < cost_range.second)) {
        throw Error(Errc::invalid_spec, "cost_range min must be < max");
    }
    if (!(duration_range.first < duration_range.second)) {
        throw Error(Errc::invalid_spec, "duration_range min must be < max");
    }
    if (cost_range.first < 0.0 || duration_range.first < 0.0) {
        throw Error(Errc::invalid_spec, "ranges must be non-negative");
    }
    for (const auto& [tag, values] : attribute_vocab) {
        if (values.empty()) {
            throw Error(Errc::invalid_spec, "attribute vocab for '" + tag + "' is empty");
        }
    }
}

GeneratorSpec GeneratorSpec::defaults(uint64_t seed) {
    GeneratorSpec spec;
    spec.seed = seed;
    spec.attribute_vocab = {
        {"flight.carrier", {"EcoAir", "SkyJet", "BlueWing", "AeroMax"}},
        {"flight.cabin", {"economy", "premium", "business"}},
        {"lodging.star_rating", {"2", "3", "4", "5"}},
        {"lodging.chain", {"GreenStay", "UrbanInn", "ParkHotel"}},
        {"ground.mode", {"train", "bus", "car", "shuttle"}},
        {"activity.category", {"museum", "tour", "outdoor"}},
    };
    return spec;
}

namespace {

constexpr OptionKind kKindCycle[4] = {OptionKind::flight, OptionKind::lodging,
                                      OptionKind::ground, OptionKind::activity};

// Vocab entries applicable to `kind`: bare tags plus "<kind>.<tag>" ones.
std::vector<std::pair<std::string, const std::vector<std::string>*>>
applicable_vocab(const GeneratorSpec& spec, OptionKind kind) {
    std::vector<std::pair<std::string, const std::vector<std::string>*>> out;
    std::string prefix = std::string(to_string(kind)) + ".";
    for (const auto& [key, values] : spec.attribute_vocab) {
        auto dot = key.find('.');
        if (dot == std::string::npos) {
            out.emplace_back(key, &values);
        } else if (key.compare(0, prefix.size(), prefix) == 0) {
            out.emplace_back(key.substr(dot + 1), &values);
        }
    }
    return out;
}

} // namespace

Catalog generate_catalog(const GeneratorSpec& spec) {
    spec.validate();
    Catalog catalog;
    catalog.seed = spec.seed;
    catalog.segments.reserve(static_cast<size_t>(spec.num_segments));

    for (int s = 0; s < spec.num_segments; ++s) {
        SplitMix64 rng(mix64(spec.seed, static_cast<uint64_t>(s)));
        Segment seg;
        seg.index = s;
        OptionKind kind = kKindCycle[s % 4];
        seg.label = std::string(to_string(kind)) + " segment " + std::to_string(s);
        auto vocab = applicable_vocab(spec, kind);

        int m = spec.options_per_segment;
        std::vector<double> costs(static_cast<size_t>(m));
        std::vector<double> durations(static_cast<size_t>(m));
        for (int k = 0; k < m; ++k) {
            costs[static_cast<size_t>(k)] = rng.next_range(spec.cost_range.first, spec.cost_range.second);
            durations[static_cast<size_t>(k)] =
                rng.next_range(spec.duration_range.first, spec.duration_range.second);
        }

        std::vector<double> emissions(static_cast<size_t>(m));
        if (spec.emissions_model == EmissionsModel::independent) {
            for (int k = 0; k < m; ++k) {
                emissions[static_cast<size_t>(k)] = rng.next_range(kEmissionsLow, kEmissionsHigh);
            }
        } else {
            // Greener costs more: draw emission levels, hand them out in
            // descending order along the cost-ascending ranking, then jitter.
            std::vector<double> levels(static_cast<size_t>(m));
            for (double& e : levels) e = rng.next_range(kEmissionsLow, kEmissionsHigh);
            std::sort(levels.begin(), levels.end(), std::greater<>());
            std::vector<size_t> by_cost(static_cast<size_t>(m));
            std::iota(by_cost.begin(), by_cost.end(), size_t{0});
            std::sort(by_cost.begin(), by_cost.end(),
                      [&](size_t a, size_t b) { return costs[a] < costs[b]; });
            for (int k = 0; k < m; ++k) {
                emissions[by_cost[static_cast<size_t>(k)]] =
                    levels[static_cast<size_t>(k)] * rng.next_range(0.9, 1.1);
            }
        }

        for (int k = 0; k < m; ++k) {
            TravelOption opt;
            opt.id = "s" + std::to_string(s) + "-o" + std::to_string(k);
            opt.segment_index = s;
            opt.kind = kind;
            opt.cost = costs[static_cast<size_t>(k)];
            opt.duration = durations[static_cast<size_t>(k)];
            opt.emissions = emissions[static_cast<size_t>(k)];
            for (const auto& [tag, values] : vocab) {
                opt.attributes[tag] = (*values)[rng.next_below(values->size())];
            }
            seg.options.push_back(std::move(opt));
        }
        catalog.segments.push_back(std::move(seg));
    }

    catalog.validate();
    return catalog;
}

double green_threshold(const Segment& segment) {
    std::vector<double> es;
    es.reserve(segment.options.size());
    for (const TravelOption& opt : segment.options) es.push_back(opt.emissions);
    std::sort(es.begin(), es.end());
    return es[(es.size() - 1) / 4];
}

bool is_green(const Segment& segment, int option_index) {
    if (option_index < 0 || static_cast<size_t>(option_index) >= segment.options.size()) {
        throw Error(Errc::index_out_of_range, "option index out of range for green check");
    }
    return segment.options[static_cast<size_t>(option_index)].emissions <=
           green_threshold(segment);
}

std::vector<CostHistoryRow> generate_cost_history(uint64_t seed, int n_rows,
                                                  const std::array<double, 5>& true_coefficients,
                                                  double noise_std) {
    if (n_rows < 1) throw Error(Errc::invalid_spec, "cost history needs n_rows >= 1");
    if (!(noise_std >= 0.0) || !std::isfinite(noise_std)) {
        throw Error(Errc::invalid_spec, "noise_std must be finite and >= 0");
    }
    SplitMix64 rng(mix64(seed, 0x9c0057));
    std::vector<CostHistoryRow> rows;
    rows.reserve(static_cast<size_t>(n_rows));
    for (int i = 0; i < n_rows; ++i) {
        CostHistoryRow row;
        row.days_to_departure = rng.next_range(0.0, 180.0);
        row.season_index = static_cast<int>(rng.next_below(4));
        row.demand_factor = rng.next_range(0.2, 3.0);
        row.distance = rng.next_range(100.0, 9000.0);
        double price = true_coefficients[0] + true_coefficients[1] * row.days_to_departure +
                       true_coefficients[2] * static_cast<double>(row.season_index) +
                       true_coefficients[3] * row.demand_factor +
                       true_coefficients[4] * row.distance;
        if (noise_std > 0.0) price += noise_std * rng.next_gaussian();
        row.observed_price = std::max(0.0, price);
        rows.push_back(row);
    }
    return rows;
}

void save_cost_history_csv(const std::vector<CostHistoryRow>& rows, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(Errc::io_error, "cannot open '" + path + "' for writing");
    out << "days_to_departure,season_index,demand_factor,distance,observed_price\n";
    out.precision(17);
    for (const CostHistoryRow& row : rows) {
        out << row.days_to_departure << ',' << row.season_index << ',' << row.demand_factor << ','
            << row.distance << ',' << row.observed_price << '\n';
    }
    if (!out) throw Error(Errc::io_error, "failed writing '" + path + "'");
}

std::vector<CostHistoryRow> load_cost_history_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::io_error, "cannot open '" + path + "'");
    std::string line;
    if (!std::getline(in, line)) throw Error(Errc::parse_error, path + ": empty file");
    std::vector<CostHistoryRow> rows;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ss(line);
        CostHistoryRow row;
        char c1, c2, c3, c4;
        if (!(ss >> row.days_to_departure >> c1 >> row.season_index >> c2 >> row.demand_factor >>
              c3 >> row.distance >> c4 >> row.observed_price) ||
            c1 != ',' || c2 != ',' || c3 != ',' || c4 != ',') {
            throw Error(Errc::parse_error,
                        path + ":" + std::to_string(lineno) + ": malformed CSV row");
        }
        if (row.observed_price < 0.0) {
            throw Error(Errc::schema_violation,
                        path + ":" + std::to_string(lineno) + ": observed_price must be >= 0");
        }
        rows.push_back(row);
    }
    return rows;
}

Catalog load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::io_error, "cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return catalog_from_json_text(buf.str(), path);
}

void save_catalog(const Catalog& catalog, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(Errc::io_error, "cannot open '" + path + "' for writing");
    out << catalog_file_json(catalog).dump(2) << '\n';
    if (!out) throw Error(Errc::io_error, "failed writing '" + path + "'");
}

} // namespace itinopt
