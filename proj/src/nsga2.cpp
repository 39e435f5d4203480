#include "itinopt/nsga2.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>

namespace itinopt {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

void GaConfig::validate() const {
    if (population_size < 4 || population_size % 2 != 0) {
        throw Error(Errc::invalid_argument, "population_size must be even and >= 4");
    }
    if (max_generations < 1) throw Error(Errc::invalid_argument, "max_generations must be >= 1");
    if (crossover_rate < 0.0 || crossover_rate > 1.0) {
        throw Error(Errc::invalid_argument, "crossover_rate must be in [0,1]");
    }
    if (mutation_rate && (*mutation_rate < 0.0 || *mutation_rate > 1.0)) {
        throw Error(Errc::invalid_argument, "mutation_rate must be in [0,1]");
    }
    if (tournament_size < 1) throw Error(Errc::invalid_argument, "tournament_size must be >= 1");
    if (stagnation_window < 1) throw Error(Errc::invalid_argument, "stagnation_window must be >= 1");
}

bool constrained_dominates(const RankedIndividual& a, const RankedIndividual& b) {
    if (a.feasible() && !b.feasible()) return true;
    if (!a.feasible() && b.feasible()) return false;
    if (!a.feasible()) return a.violation < b.violation;
    return dominates(a.objectives, b.objectives);
}

std::vector<std::vector<size_t>> non_dominated_sort(
    const std::vector<RankedIndividual>& population) {
    size_t n = population.size();
    std::vector<std::vector<size_t>> dominated_by(n);
    std::vector<int> domination_count(n, 0);
    std::vector<std::vector<size_t>> fronts;

    std::vector<size_t> current;
    for (size_t p = 0; p < n; ++p) {
        for (size_t q = 0; q < n; ++q) {
            if (p == q) continue;
            if (constrained_dominates(population[p], population[q])) {
                dominated_by[p].push_back(q);
            } else if (constrained_dominates(population[q], population[p])) {
                ++domination_count[p];
            }
        }
        if (domination_count[p] == 0) current.push_back(p);
    }

    while (!current.empty()) {
        fronts.push_back(current);
        std::vector<size_t> next;
        for (size_t p : current) {
            for (size_t q : dominated_by[p]) {
                if (--domination_count[q] == 0) next.push_back(q);
            }
        }
        std::sort(next.begin(), next.end());
        current = std::move(next);
    }
    return fronts;
}

std::vector<double> crowding_distance(const std::vector<RankedIndividual>& population,
                                      const std::vector<size_t>& front) {
    size_t n = front.size();
    std::vector<double> dist(n, 0.0);
    if (n <= 2) {
        std::fill(dist.begin(), dist.end(), kInf);
        return dist;
    }

    auto component = [&](size_t pop_idx, int objective) {
        const ObjectiveVector& v = population[pop_idx].objectives;
        switch (objective) {
            case 0: return v.cost;
            case 1: return v.time;
            default: return v.emissions;
        }
    };

    std::vector<size_t> order(n);
    for (int obj = 0; obj < 3; ++obj) {
        std::iota(order.begin(), order.end(), size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
            return component(front[a], obj) < component(front[b], obj);
        });
        double lo = component(front[order.front()], obj);
        double hi = component(front[order.back()], obj);
        dist[order.front()] = kInf;
        dist[order.back()] = kInf;
        double range = hi - lo;
        if (range <= 0.0) continue; // zero-range objective contributes nothing
        for (size_t i = 1; i + 1 < n; ++i) {
            if (dist[order[i]] == kInf) continue;
            dist[order[i]] +=
                (component(front[order[i + 1]], obj) - component(front[order[i - 1]], obj)) / range;
        }
    }
    return dist;
}

size_t select_parent(const std::vector<RankedIndividual>& population, int tournament_size,
                     SplitMix64& rng) {
    size_t best = rng.next_below(population.size());
    for (int k = 1; k < tournament_size; ++k) {
        size_t challenger = rng.next_below(population.size());
        const RankedIndividual& c = population[challenger];
        const RankedIndividual& b = population[best];
        bool wins = c.rank < b.rank ||
                    (c.rank == b.rank && c.crowding > b.crowding) ||
                    (c.rank == b.rank && c.crowding == b.crowding && challenger < best);
        if (wins) best = challenger;
    }
    return best;
}

std::pair<Itinerary, Itinerary> crossover(const Itinerary& parent_a, const Itinerary& parent_b,
                                          double crossover_rate, SplitMix64& rng) {
    if (parent_a.choices.size() != parent_b.choices.size()) {
        throw Error(Errc::length_mismatch, "crossover parents differ in chromosome length");
    }
    Itinerary child_a = parent_a;
    Itinerary child_b = parent_b;
    if (rng.next_double() < crossover_rate) {
        for (size_t i = 0; i < child_a.choices.size(); ++i) {
            if (rng.next_bool(0.5)) std::swap(child_a.choices[i], child_b.choices[i]);
        }
    }
    return {std::move(child_a), std::move(child_b)};
}

void mutate(Itinerary& child, const Catalog& catalog, double mutation_rate, SplitMix64& rng) {
    for (size_t i = 0; i < child.choices.size(); ++i) {
        if (rng.next_double() < mutation_rate) {
            child.choices[i] = static_cast<int>(rng.next_below(catalog.segments[i].options.size()));
        }
    }
}

double weighted_score(const ObjectiveWeights& w, const ObjectiveVector& v) {
    return w.w_cost * v.cost + w.w_time * v.time + w.w_emissions * v.emissions;
}

size_t pick_recommended_index(const std::vector<RankedIndividual>& front,
                              const Preferences& prefs) {
    if (front.empty()) throw Error(Errc::empty_front, "cannot recommend from an empty front");

    ObjectiveVector lo = front.front().objectives;
    ObjectiveVector hi = lo;
    for (const RankedIndividual& ind : front) {
        lo.cost = std::min(lo.cost, ind.objectives.cost);
        lo.time = std::min(lo.time, ind.objectives.time);
        lo.emissions = std::min(lo.emissions, ind.objectives.emissions);
        hi.cost = std::max(hi.cost, ind.objectives.cost);
        hi.time = std::max(hi.time, ind.objectives.time);
        hi.emissions = std::max(hi.emissions, ind.objectives.emissions);
    }
    auto norm = [](double v, double lo_v, double hi_v) {
        double range = hi_v - lo_v;
        return range > 0.0 ? (v - lo_v) / range : 0.0;
    };

    const ObjectiveWeights& w = prefs.objective_weights;
    size_t best = 0;
    double best_score = kInf;
    for (size_t i = 0; i < front.size(); ++i) {
        const ObjectiveVector& v = front[i].objectives;
        double score = w.w_cost * norm(v.cost, lo.cost, hi.cost) +
                       w.w_time * norm(v.time, lo.time, hi.time) +
                       w.w_emissions * norm(v.emissions, lo.emissions, hi.emissions);
        if (score < best_score) {
            best_score = score;
            best = i;
        }
    }
    return best;
}

Itinerary pick_recommended(const std::vector<RankedIndividual>& front, const Preferences& prefs) {
    return front[pick_recommended_index(front, prefs)].itinerary;
}

namespace {

struct FrontKey {
    std::vector<std::array<double, 3>> vectors;

    bool operator==(const FrontKey&) const = default;
};

FrontKey front_objectives(const std::vector<RankedIndividual>& population) {
    FrontKey key;
    for (const RankedIndividual& ind : population) {
        if (ind.rank == 0 && ind.feasible()) {
            key.vectors.push_back({ind.objectives.cost, ind.objectives.time,
                                   ind.objectives.emissions});
        }
    }
    std::sort(key.vectors.begin(), key.vectors.end());
    key.vectors.erase(std::unique(key.vectors.begin(), key.vectors.end()), key.vectors.end());
    return key;
}

void rank_and_crowd(std::vector<RankedIndividual>& population) {
    auto fronts = non_dominated_sort(population);
    for (size_t r = 0; r < fronts.size(); ++r) {
        auto dist = crowding_distance(population, fronts[r]);
        for (size_t i = 0; i < fronts[r].size(); ++i) {
            population[fronts[r][i]].rank = static_cast<int>(r);
            population[fronts[r][i]].crowding = dist[i];
        }
    }
}

} // namespace

GaOutcome run_nsga2(const Catalog& catalog, const Preferences& prefs, const GaConfig& config,
                    const GaObserver& observer) {
    config.validate();
    if (catalog.segments.empty()) {
        throw Error(Errc::invalid_argument, "catalog has no segments");
    }
    size_t num_segments = catalog.segments.size();
    double mutation_rate =
        config.mutation_rate.value_or(1.0 / static_cast<double>(num_segments));
    SplitMix64 rng(mix64(config.seed, 0x4e534741));

    auto make_individual = [&](Itinerary itinerary) {
        RankedIndividual ind;
        ind.objectives = evaluate(itinerary, catalog);
        ind.violation = is_feasible(itinerary, catalog, prefs).total_violation;
        ind.itinerary = std::move(itinerary);
        return ind;
    };

    GaOutcome outcome;
    double best_score = kInf;
    auto note_evaluated = [&](const RankedIndividual& ind) {
        if (ind.feasible()) {
            best_score = std::min(best_score, weighted_score(prefs.objective_weights, ind.objectives));
        }
    };

    std::vector<RankedIndividual> population;
    population.reserve(static_cast<size_t>(config.population_size));
    for (int i = 0; i < config.population_size; ++i) {
        Itinerary itinerary;
        itinerary.choices.reserve(num_segments);
        for (const Segment& seg : catalog.segments) {
            itinerary.choices.push_back(static_cast<int>(rng.next_below(seg.options.size())));
        }
        population.push_back(make_individual(std::move(itinerary)));
        note_evaluated(population.back());
    }
    outcome.evaluations = config.population_size;
    rank_and_crowd(population);
    outcome.history.push_back(best_score);
    if (observer) observer(0, population);

    FrontKey front_key = front_objectives(population);
    int stagnant = 0;

    for (int gen = 1; gen <= config.max_generations; ++gen) {
        std::vector<RankedIndividual> offspring;
        offspring.reserve(static_cast<size_t>(config.population_size));
        while (offspring.size() < static_cast<size_t>(config.population_size)) {
            const Itinerary& pa = population[select_parent(population, config.tournament_size, rng)].itinerary;
            const Itinerary& pb = population[select_parent(population, config.tournament_size, rng)].itinerary;
            auto [ca, cb] = crossover(pa, pb, config.crossover_rate, rng);
            mutate(ca, catalog, mutation_rate, rng);
            mutate(cb, catalog, mutation_rate, rng);
            offspring.push_back(make_individual(std::move(ca)));
            note_evaluated(offspring.back());
            offspring.push_back(make_individual(std::move(cb)));
            note_evaluated(offspring.back());
        }
        outcome.evaluations += config.population_size;

        // mu+lambda environmental selection on parents plus offspring.
        std::vector<RankedIndividual> combined = std::move(population);
        combined.insert(combined.end(), std::make_move_iterator(offspring.begin()),
                        std::make_move_iterator(offspring.end()));
        auto fronts = non_dominated_sort(combined);

        std::vector<RankedIndividual> survivors;
        survivors.reserve(static_cast<size_t>(config.population_size));
        for (const auto& front : fronts) {
            if (survivors.size() == static_cast<size_t>(config.population_size)) break;
            size_t room = static_cast<size_t>(config.population_size) - survivors.size();
            auto dist = crowding_distance(combined, front);
            if (front.size() <= room) {
                for (size_t idx : front) survivors.push_back(std::move(combined[idx]));
            } else {
                std::vector<size_t> order(front.size());
                std::iota(order.begin(), order.end(), size_t{0});
                std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
                    if (dist[a] != dist[b]) return dist[a] > dist[b];
                    return front[a] < front[b];
                });
                for (size_t i = 0; i < room; ++i) {
                    survivors.push_back(std::move(combined[front[order[i]]]));
                }
            }
        }
        population = std::move(survivors);
        rank_and_crowd(population);

        outcome.generations_run = gen;
        outcome.history.push_back(best_score);
        if (observer) observer(gen, population);

        FrontKey new_key = front_objectives(population);
        if (new_key == front_key) {
            ++stagnant;
        } else {
            front_key = std::move(new_key);
            outcome.front_settled_generation = gen;
            stagnant = 0;
        }
        if (stagnant >= config.stagnation_window) break;
    }

    // Feasible rank-0 of the final population, deduplicated by chromosome.
    std::vector<RankedIndividual> front;
    for (const RankedIndividual& ind : population) {
        if (ind.rank == 0 && ind.feasible()) front.push_back(ind);
    }
    std::sort(front.begin(), front.end(), [](const RankedIndividual& a, const RankedIndividual& b) {
        return a.itinerary < b.itinerary;
    });
    front.erase(std::unique(front.begin(), front.end(),
                            [](const RankedIndividual& a, const RankedIndividual& b) {
                                return a.itinerary == b.itinerary;
                            }),
                front.end());
    if (front.empty()) {
        throw Error(Errc::no_feasible_solution, "final population has no feasible individual");
    }
    outcome.pareto_front = std::move(front);
    outcome.recommended = pick_recommended(outcome.pareto_front, prefs);
    return outcome;
}

void to_json(json& j, const GaConfig& config) {
    j = json{{"population_size", config.population_size},
             {"max_generations", config.max_generations},
             {"crossover_rate", config.crossover_rate},
             {"tournament_size", config.tournament_size},
             {"seed", config.seed},
             {"stagnation_window", config.stagnation_window}};
    if (config.mutation_rate) {
        j["mutation_rate"] = *config.mutation_rate;
    } else {
        j["mutation_rate"] = nullptr;
    }
}

void from_json(const json& j, GaConfig& config) {
    config = GaConfig{};
    if (j.contains("population_size")) j.at("population_size").get_to(config.population_size);
    if (j.contains("max_generations")) j.at("max_generations").get_to(config.max_generations);
    if (j.contains("crossover_rate")) j.at("crossover_rate").get_to(config.crossover_rate);
    if (j.contains("mutation_rate") && !j.at("mutation_rate").is_null()) {
        config.mutation_rate = j.at("mutation_rate").get<double>();
    }
    if (j.contains("tournament_size")) j.at("tournament_size").get_to(config.tournament_size);
    if (j.contains("seed")) j.at("seed").get_to(config.seed);
    if (j.contains("stagnation_window")) j.at("stagnation_window").get_to(config.stagnation_window);
    config.validate();
}

void to_json(json& j, const RankedIndividual& ind) {
    j = json{{"itinerary", ind.itinerary},
             {"objectives", ind.objectives},
             {"violation", ind.violation},
             {"rank", ind.rank},
             {"crowding", std::isinf(ind.crowding) ? json(nullptr) : json(ind.crowding)}};
}

void to_json(json& j, const GaOutcome& outcome) {
    json history = json::array();
    for (double h : outcome.history) history.push_back(std::isinf(h) ? json(nullptr) : json(h));
    j = json{{"pareto_front", outcome.pareto_front},
             {"recommended", outcome.recommended},
             {"generations_run", outcome.generations_run},
             {"evaluations", outcome.evaluations},
             {"history", std::move(history)},
             {"front_settled_generation", outcome.front_settled_generation}};
}

} // namespace itinopt
