#include "itinopt/costmodel.hpp"

#include <cmath>

namespace itinopt {

namespace {

constexpr int kP = 5; // intercept + 4 features

std::array<double, kP> features_of(const CostHistoryRow& row) {
    return {1.0, row.days_to_departure, static_cast<double>(row.season_index), row.demand_factor,
            row.distance};
}

std::array<double, kP> features_of(const PricingContext& ctx) {
    return {1.0, ctx.days_to_departure, static_cast<double>(ctx.season_index), ctx.demand_factor,
            ctx.distance};
}

// Gaussian elimination with partial pivoting on the kP x kP system A x = b.
// Returns false when a pivot falls below the singularity threshold.
bool solve_linear(std::array<std::array<double, kP>, kP> a, std::array<double, kP> b,
                  std::array<double, kP>& x) {
    constexpr double kPivotTol = 1e-12;
    for (int col = 0; col < kP; ++col) {
        int pivot = col;
        for (int r = col + 1; r < kP; ++r) {
            if (std::fabs(a[r][col]) > std::fabs(a[pivot][col])) pivot = r;
        }
        if (std::fabs(a[pivot][col]) < kPivotTol) return false;
        std::swap(a[col], a[pivot]);
        std::swap(b[col], b[pivot]);
        for (int r = col + 1; r < kP; ++r) {
            double factor = a[r][col] / a[col][col];
            for (int c = col; c < kP; ++c) a[r][c] -= factor * a[col][c];
            b[r] -= factor * b[col];
        }
    }
    for (int r = kP - 1; r >= 0; --r) {
        double sum = b[r];
        for (int c = r + 1; c < kP; ++c) sum -= a[r][c] * x[c];
        x[r] = sum / a[r][r];
    }
    for (double v : x) {
        if (!std::isfinite(v)) return false;
    }
    return true;
}

} // namespace

CostModel fit(const std::vector<CostHistoryRow>& history) {
    if (history.size() < static_cast<size_t>(kP)) {
        throw Error(Errc::insufficient_data,
                    "cost model needs at least " + std::to_string(kP) + " rows, got " +
                        std::to_string(history.size()));
    }

    std::array<std::array<double, kP>, kP> xtx{};
    std::array<double, kP> xty{};
    for (const CostHistoryRow& row : history) {
        auto f = features_of(row);
        for (int i = 0; i < kP; ++i) {
            xty[i] += f[i] * row.observed_price;
            for (int j = 0; j < kP; ++j) xtx[i][j] += f[i] * f[j];
        }
    }

    std::array<double, kP> beta{};
    if (!solve_linear(xtx, xty, beta)) {
        constexpr double kRidgeLambda = 1e-8;
        auto ridged = xtx;
        for (int i = 0; i < kP; ++i) ridged[i][i] += kRidgeLambda;
        if (!solve_linear(ridged, xty, beta)) {
            throw Error(Errc::singular_design, "design matrix is singular even under ridge");
        }
    }

    double rss = 0.0;
    for (const CostHistoryRow& row : history) {
        auto f = features_of(row);
        double pred = 0.0;
        for (int i = 0; i < kP; ++i) pred += beta[i] * f[i];
        double r = row.observed_price - pred;
        rss += r * r;
    }

    CostModel model;
    model.coefficients = beta;
    model.n_trained = static_cast<int>(history.size());
    int dof = model.n_trained - kP;
    model.residual_std = dof > 0 ? std::sqrt(rss / static_cast<double>(dof)) : 0.0;
    return model;
}

double predict(const CostModel& model, const PricingContext& ctx) {
    auto f = features_of(ctx);
    double raw = 0.0;
    for (int i = 0; i < kP; ++i) raw += model.coefficients[i] * f[i];
    return std::max(0.0, raw);
}

double reprice_factor(const CostModel& model, const PricingContext& ctx) {
    double ref = predict(model, kReferenceContext);
    if (ref <= 0.0) return 1.0;
    return predict(model, ctx) / ref;
}

Catalog reprice_catalog(const Catalog& catalog, const CostModel& model,
                        const PricingContext& ctx) {
    double factor = reprice_factor(model, ctx);
    Catalog out = catalog;
    for (Segment& seg : out.segments) {
        for (TravelOption& opt : seg.options) opt.cost = std::max(0.0, opt.cost * factor);
    }
    return out;
}

void to_json(json& j, const PricingContext& ctx) {
    j = json{{"days_to_departure", ctx.days_to_departure},
             {"season_index", ctx.season_index},
             {"demand_factor", ctx.demand_factor},
             {"distance", ctx.distance}};
}

void from_json(const json& j, PricingContext& ctx) {
    ctx = PricingContext{};
    if (j.contains("days_to_departure")) j.at("days_to_departure").get_to(ctx.days_to_departure);
    if (j.contains("season_index")) j.at("season_index").get_to(ctx.season_index);
    if (j.contains("demand_factor")) j.at("demand_factor").get_to(ctx.demand_factor);
    if (j.contains("distance")) j.at("distance").get_to(ctx.distance);
    if (ctx.days_to_departure < 0.0 || !std::isfinite(ctx.days_to_departure) ||
        !std::isfinite(ctx.demand_factor) || ctx.demand_factor < 0.0 ||
        !std::isfinite(ctx.distance) || ctx.season_index < 0 || ctx.season_index > 3) {
        throw Error(Errc::invalid_argument, "pricing context out of range");
    }
}

void to_json(json& j, const CostModel& model) {
    j = json{{"coefficients", model.coefficients},
             {"residual_std", model.residual_std},
             {"n_trained", model.n_trained}};
}

void from_json(const json& j, CostModel& model) {
    j.at("coefficients").get_to(model.coefficients);
    j.at("residual_std").get_to(model.residual_std);
    j.at("n_trained").get_to(model.n_trained);
}

} // namespace itinopt
