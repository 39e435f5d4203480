#include "itinopt/greedy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "itinopt/rng.hpp"
#include "itinopt/stats.hpp"

namespace itinopt {

void AnnealConfig::validate() const {
    if (!(cooling_factor > 0.0 && cooling_factor < 1.0)) {
        throw Error(Errc::invalid_argument, "cooling_factor must be in (0,1)");
    }
    if (iterations < 1) throw Error(Errc::invalid_argument, "iterations must be >= 1");
    if (initial_temperature < 0.0 || !std::isfinite(initial_temperature)) {
        throw Error(Errc::invalid_argument, "initial_temperature must be finite and >= 0");
    }
}

GreedyResult greedy_optimize(const Catalog& catalog, const Preferences& prefs,
                             GreedyStats* stats) {
    GreedyResult result;
    for (const Segment& seg : catalog.segments) {
        std::vector<size_t> order(seg.options.size());
        std::iota(order.begin(), order.end(), size_t{0});
        auto less = [&](size_t a, size_t b) {
            if (stats) ++stats->sort_comparisons;
            const TravelOption& oa = seg.options[a];
            const TravelOption& ob = seg.options[b];
            if (oa.emissions != ob.emissions) return oa.emissions < ob.emissions;
            if (oa.cost != ob.cost) return oa.cost < ob.cost;
            return oa.id < ob.id;
        };
        std::sort(order.begin(), order.end(), less);
        if (stats) ++stats->sorts;

        bool placed = false;
        for (size_t idx : order) {
            if (stats) ++stats->scan_steps;
            const TravelOption& opt = seg.options[idx];
            if (result.totals.cost + opt.cost <= prefs.budget &&
                result.totals.time + opt.duration <= prefs.max_time) {
                result.itinerary.choices.push_back(static_cast<int>(idx));
                result.totals.cost += opt.cost;
                result.totals.time += opt.duration;
                result.totals.emissions += opt.emissions;
                placed = true;
                break;
            }
        }
        if (!placed) {
            result.completed = false;
            result.stuck_segment = seg.index;
            return result;
        }
    }
    result.completed = true;
    return result;
}

namespace {

bool within_bounds(const ObjectiveVector& totals, const Preferences& prefs) {
    return totals.cost <= prefs.budget && totals.time <= prefs.max_time;
}

double auto_temperature(const Catalog& catalog) {
    std::vector<double> spreads;
    spreads.reserve(catalog.segments.size());
    for (const Segment& seg : catalog.segments) {
        double lo = seg.options.front().emissions, hi = lo;
        for (const TravelOption& opt : seg.options) {
            lo = std::min(lo, opt.emissions);
            hi = std::max(hi, opt.emissions);
        }
        spreads.push_back(hi - lo);
    }
    return stddev(spreads);
}

} // namespace

GreedyResult anneal_refine(const GreedyResult& start, const Catalog& catalog,
                           const Preferences& prefs, const AnnealConfig& config) {
    config.validate();
    if (!start.completed) {
        throw Error(Errc::invalid_start, "anneal_refine requires a completed greedy result");
    }

    double temperature = config.initial_temperature > 0.0 ? config.initial_temperature
                                                          : auto_temperature(catalog);
    // Degenerate spread statistics leave T at 0; a tiny floor keeps the
    // acceptance test exp(-delta/T) well defined (uphill is then rejected).
    temperature = std::max(temperature, 1e-12);

    SplitMix64 rng(mix64(config.seed, 0xa11ea1));
    Itinerary current = start.itinerary;
    ObjectiveVector current_totals = evaluate(current, catalog);
    Itinerary best = current;
    ObjectiveVector best_totals = current_totals;

    for (int iter = 0; iter < config.iterations; ++iter) {
        size_t seg_idx = rng.next_below(catalog.segments.size());
        const Segment& seg = catalog.segments[seg_idx];
        int new_choice = static_cast<int>(rng.next_below(seg.options.size()));

        Itinerary candidate = current;
        candidate.choices[seg_idx] = new_choice;
        ObjectiveVector cand_totals = evaluate(candidate, catalog);

        if (within_bounds(cand_totals, prefs)) {
            double delta = cand_totals.emissions - current_totals.emissions;
            bool accept = delta < 0.0 || rng.next_double() < std::exp(-delta / temperature);
            if (accept) {
                current = std::move(candidate);
                current_totals = cand_totals;
                if (current_totals.emissions < best_totals.emissions) {
                    best = current;
                    best_totals = current_totals;
                }
            }
        }
        temperature *= config.cooling_factor;
    }

    GreedyResult out;
    out.itinerary = std::move(best);
    out.totals = best_totals;
    out.completed = true;
    return out;
}

} // namespace itinopt
