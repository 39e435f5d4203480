#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "itinopt/json_io.hpp"
#include "itinopt/rng.hpp"
#include "itinopt/types.hpp"

namespace itinopt {

struct GaConfig {
    int population_size = 100; // even, >= 4
    int max_generations = 100;
    double crossover_rate = 0.9;
    std::optional<double> mutation_rate; // per gene; empty = 1/num_segments
    int tournament_size = 2;
    uint64_t seed = 0;
    int stagnation_window = 20; // generations without front change before early stop

    void validate() const; // throws Error(invalid_argument)

    bool operator==(const GaConfig&) const = default;
};

struct RankedIndividual {
    Itinerary itinerary;
    ObjectiveVector objectives;
    double violation = 0.0; // total_violation from is_feasible
    int rank = 0;
    double crowding = 0.0; // +inf sentinel on front boundaries

    bool feasible() const { return violation == 0.0; }
};

struct GaOutcome {
    std::vector<RankedIndividual> pareto_front; // feasible rank 0, deduped, sorted by chromosome
    Itinerary recommended;
    int generations_run = 0;
    long long evaluations = 0;          // == population_size * (generations_run + 1)
    std::vector<double> history;        // best-so-far weighted score, one entry per generation
    int front_settled_generation = 0;   // generation at which the final front set first appeared
};

// Feasibility-aware dominance: feasible beats infeasible, two infeasible
// compare by violation, two feasible by Pareto dominance.
bool constrained_dominates(const RankedIndividual& a, const RankedIndividual& b);

// Fast non-dominated sort; returns fronts as index lists partitioning the
// population. Does not mutate the individuals.
std::vector<std::vector<size_t>> non_dominated_sort(const std::vector<RankedIndividual>& population);

// NSGA-II crowding distances for one front. Boundary individuals per
// objective get +inf; an objective with zero range over the front
// contributes 0 to everyone.
std::vector<double> crowding_distance(const std::vector<RankedIndividual>& population,
                                      const std::vector<size_t>& front);

// Tournament over uniformly drawn entrants: lower rank wins, ties broken by
// larger crowding, then by lower population index. Returns the winner index.
size_t select_parent(const std::vector<RankedIndividual>& population, int tournament_size,
                     SplitMix64& rng);

// Uniform crossover at segment granularity, applied with probability
// crossover_rate (else copies). Throws Error(length_mismatch).
std::pair<Itinerary, Itinerary> crossover(const Itinerary& parent_a, const Itinerary& parent_b,
                                          double crossover_rate, SplitMix64& rng);

// Each gene independently resampled uniformly from its segment's options
// with probability mutation_rate.
void mutate(Itinerary& child, const Catalog& catalog, double mutation_rate, SplitMix64& rng);

double weighted_score(const ObjectiveWeights& w, const ObjectiveVector& v);

// Weighted sums of min-max-normalized objectives over the front; an
// objective with zero range across the front contributes 0.
std::vector<double> normalized_scores(const std::vector<RankedIndividual>& front,
                                      const Preferences& prefs);

// Minimizes the normalized weighted score; ties go to the earliest entry.
// Throws Error(empty_front).
Itinerary pick_recommended(const std::vector<RankedIndividual>& front, const Preferences& prefs);
size_t pick_recommended_index(const std::vector<RankedIndividual>& front, const Preferences& prefs);

// Per-generation observer for tests and convergence reporting; receives the
// ranked population after environmental selection.
using GaObserver = std::function<void(int generation, const std::vector<RankedIndividual>&)>;

// NSGA-II with binary-tournament selection, uniform crossover, uniform-reset
// mutation and mu+lambda elitist replacement. Deterministic per seed.
// Throws Error(no_feasible_solution) when the final population has no
// feasible member.
GaOutcome run_nsga2(const Catalog& catalog, const Preferences& prefs, const GaConfig& config,
                    const GaObserver& observer = nullptr);

void to_json(json& j, const GaConfig& config);
void from_json(const json& j, GaConfig& config);

void to_json(json& j, const RankedIndividual& ind);
void to_json(json& j, const GaOutcome& outcome);

} // namespace itinopt
