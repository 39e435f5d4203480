#pragma once

#include <array>
#include <chrono>
#include <condition_variable>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "itinopt/bus.hpp"
#include "itinopt/constraints.hpp"
#include "itinopt/costmodel.hpp"
#include "itinopt/greedy.hpp"
#include "itinopt/nsga2.hpp"

namespace itinopt {

enum class OptimizeMode { pareto, greedy, greedy_annealed };

const char* to_string(OptimizeMode mode);
OptimizeMode optimize_mode_from_string(const std::string& s);

struct OptimizeRequest {
    std::string request_id;
    std::string catalog_id;                 // ignored when inline_catalog is set
    std::optional<Catalog> inline_catalog;
    Preferences prefs;
    PricingContext pricing_ctx;
    OptimizeMode mode = OptimizeMode::pareto;
    std::optional<GaConfig> ga_config;
};

// Choices and ids refer to the original catalog; objectives are evaluated on
// the repriced pruned catalog the optimizer actually searched.
struct RecommendedPlan {
    Itinerary itinerary;
    std::vector<std::string> option_ids;
    ObjectiveVector objectives;
};

struct OptimizeResponse {
    std::string request_id;
    RecommendedPlan recommended;
    std::vector<RecommendedPlan> alternatives; // Pareto members, best score first, <= 10
    std::optional<MatchReport> match_report;   // absent when the async stage timed out
    bool green = false;                        // recommended contains >= 1 green option
    std::vector<std::string> diagnostics;
    std::map<std::string, double> timings_ms;  // per invoked service
};

void to_json(json& j, const OptimizeRequest& req);
void from_json(const json& j, OptimizeRequest& req);
void to_json(json& j, const RecommendedPlan& plan);
void to_json(json& j, const OptimizeResponse& resp);
void from_json(const json& j, OptimizeResponse& resp);

// The synchronous stages shared by the gateway and the direct composition:
// compile+prune, reprice, optimize, translate back to original indices.
struct PipelineOutput {
    Catalog pruned;           // repriced pruned catalog (the optimizer's view)
    Itinerary pruned_choice;  // recommended, in pruned-catalog indices
    RecommendedPlan recommended;
    std::vector<RecommendedPlan> alternatives;
    std::vector<std::string> diagnostics;
    double reprice_ratio = 1.0;
};

PipelineOutput run_pipeline(const Catalog& original, const OptimizeRequest& req,
                            const CostModel& model, const GaConfig& default_ga);

// Full composition without the gateway or bus; responses are extensionally
// identical to Gateway::handle_optimize modulo timings.
OptimizeResponse optimize_direct(const Catalog& original, const OptimizeRequest& req,
                                 const CostModel& model, const GaConfig& default_ga);

// Green iff at least one chosen option is green within its original segment.
bool itinerary_has_green_option(const Catalog& original, const std::vector<int>& original_choices);

// Fixed-bucket latency histogram (geometric bucket bounds); quantiles are
// bucket upper bounds, so p50 <= p90 <= p99 by construction.
class LatencyHistogram {
public:
    void record(double ms);
    double quantile(double q) const;
    uint64_t count() const { return total_; }
    json to_json() const;

private:
    static constexpr int kBuckets = 48;
    static double upper_bound(int bucket);
    std::array<uint64_t, kBuckets> counts_{};
    uint64_t total_ = 0;
    double sum_ = 0.0;
};

struct GatewayConfig {
    std::chrono::milliseconds aggregation_deadline{10000};
    GaConfig default_ga{};
    std::string catalog_dir; // where catalog_ref ids resolve to <id>.json
    MessageBus::Options bus_options{};
    // Startup cost-model training set (synthetic, deterministic).
    uint64_t cost_model_seed = 7;
    int cost_model_rows = 256;
    std::array<double, 5> cost_model_truth{200.0, -0.8, 15.0, 40.0, 0.02};
    double cost_model_noise = 5.0;
};

// API gateway plus the in-process service registry. The user, preference,
// cost and itinerary services run synchronously on the caller's thread; the
// sustainability and preference-matching services consume bus events and
// publish their partial results back, which handle_optimize aggregates under
// the configured deadline.
class Gateway {
public:
    explicit Gateway(GatewayConfig config = {});
    ~Gateway();

    Gateway(const Gateway&) = delete;
    Gateway& operator=(const Gateway&) = delete;

    void register_catalog(const std::string& id, Catalog catalog);

    // Throws Error(unknown_catalog) / Error(optimizer_failed) /
    // Error(invalid_argument); async timeouts yield a partial response with
    // diagnostics instead of an error.
    OptimizeResponse handle_optimize(const OptimizeRequest& request);

    json health() const;
    json metrics() const;

    const CostModel& cost_model() const { return model_; }
    const GatewayConfig& config() const { return config_; }
    MessageBus& bus() { return *bus_; }

    std::shared_ptr<const Catalog> resolve_catalog(const OptimizeRequest& request);

private:
    struct Aggregation;

    void on_itinerary_completed(const BusEvent& event);
    void on_partial_result(const BusEvent& event);
    std::shared_ptr<Aggregation> find_aggregation(const std::string& request_id);
    void mark_service_ok(const std::string& service);
    void mark_service_error(const std::string& service, const std::string& message);

    GatewayConfig config_;
    CostModel model_;
    std::unique_ptr<MessageBus> bus_;

    mutable std::mutex catalogs_mutex_;
    std::map<std::string, std::shared_ptr<const Catalog>> catalogs_;

    mutable std::mutex aggregations_mutex_;
    std::map<std::string, std::shared_ptr<Aggregation>> aggregations_;

    mutable std::mutex metrics_mutex_;
    uint64_t requests_total_ = 0;
    uint64_t responses_total_ = 0;
    uint64_t errors_total_ = 0;
    uint64_t async_timeouts_total_ = 0;
    std::map<std::string, LatencyHistogram> stage_latency_;

    mutable std::mutex services_mutex_;
    std::map<std::string, std::string> service_errors_; // service -> last error ("" = healthy)
};

} // namespace itinopt
