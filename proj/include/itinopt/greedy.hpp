#pragma once

#include <cstdint>
#include <optional>

#include "itinopt/types.hpp"

namespace itinopt {

// Result of the greedy builder. When incomplete, `itinerary.choices` holds
// only the prefix of segments that were filled and `totals` the running sums
// up to the stuck segment.
struct GreedyResult {
    Itinerary itinerary;
    ObjectiveVector totals;
    bool completed = false;
    std::optional<int> stuck_segment;
};

// Test instrumentation: one sort + one linear scan per segment.
struct GreedyStats {
    long sorts = 0;
    long sort_comparisons = 0;
    long scan_steps = 0;
};

// Walks segments in index order; within each, scans options sorted by
// (emissions asc, cost asc, id asc) and takes the first one that keeps the
// running cost within budget and running time within max_time. Infeasibility
// is a result state (completed=false, stuck_segment set), not an error.
GreedyResult greedy_optimize(const Catalog& catalog, const Preferences& prefs,
                             GreedyStats* stats = nullptr);

struct AnnealConfig {
    double initial_temperature = 0.0; // emissions units; 0 = auto from segment spreads
    double cooling_factor = 0.95;     // (0,1)
    int iterations = 1000;            // >= 1
    uint64_t seed = 0;

    void validate() const; // throws Error(invalid_argument)
};

// Simulated-annealing refinement of a completed greedy result. Neighbor move:
// resample one uniformly chosen segment's option. Moves that keep budget and
// max_time are accepted when they lower emissions, or with probability
// exp(-delta/T) otherwise; T decays by cooling_factor each iteration.
// Returns the best feasible itinerary ever visited, so the result never has
// higher emissions than the start. Throws Error(invalid_start) if
// start.completed is false.
GreedyResult anneal_refine(const GreedyResult& start, const Catalog& catalog,
                           const Preferences& prefs, const AnnealConfig& config);

} // namespace itinopt
