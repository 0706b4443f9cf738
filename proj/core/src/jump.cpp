#include "trendhedge/jump.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "trendhedge/errors.hpp"

namespace trendhedge {

JumpForecast forecast_jumps(const PriceSeries& series,
                            const TrendEstimate& trend,
                            const JumpConfig& cfg) {
    if (cfg.stat_window < 4)
        throw std::invalid_argument("jump config: stat_window must be >= 4");
    if (!(cfg.z_threshold > 0.0))
        throw std::invalid_argument("jump config: z_threshold must be > 0");
    if (cfg.direction_window < 1)
        throw std::invalid_argument(
            "jump config: direction_window must be >= 1");
    if (cfg.refractory < 0)
        throw std::invalid_argument("jump config: refractory must be >= 0");
    if (series.size() != trend.size())
        throw Error("length mismatch: series has " +
                    std::to_string(series.size()) + " samples, trend " +
                    std::to_string(trend.size()));

    const std::size_t n = series.size();
    const std::size_t sw = static_cast<std::size_t>(cfg.stat_window);
    if (n < sw)
        throw Error("series has " + std::to_string(n) +
                    " samples, need at least stat_window = " +
                    std::to_string(sw));

    const auto& res = trend.residual;

    JumpForecast forecast;
    bool armed = true;
    std::size_t last_event = 0;

    // Running price maximum over samples strictly before k, so the scale
    // floor never looks ahead.
    double running_max = 0.0;
    for (std::size_t j = 0; j + 1 < sw; ++j)
        running_max = std::max(running_max, std::abs(series.values[j]));

    for (std::size_t k = sw; k < n; ++k) {
        running_max = std::max(running_max, std::abs(series.values[k - 1]));

        double sum_sq = 0.0;
        for (std::size_t j = k - sw; j < k; ++j) sum_sq += res[j] * res[j];
        const double sigma =
            std::max(std::sqrt(sum_sq / static_cast<double>(sw)),
                     1e-12 * running_max);

        const double score = std::abs(res[k]) / sigma;
        const bool in_refractory =
            !armed &&
            k <= last_event + static_cast<std::size_t>(cfg.refractory);
        if (score >= cfg.z_threshold && !in_refractory) {
            const std::size_t lo =
                k + 1 >= static_cast<std::size_t>(cfg.direction_window)
                    ? k + 1 - static_cast<std::size_t>(cfg.direction_window)
                    : 0;
            double mean = 0.0;
            for (std::size_t j = lo; j <= k; ++j) mean += res[j];
            mean /= static_cast<double>(k - lo + 1);
            forecast.events.push_back(
                {k,
                 mean > 0.0 ? JumpDirection::upward : JumpDirection::downward,
                 score});
            armed = false;
            last_event = k;
        }
    }
    return forecast;
}

HedgePath shape_delta(const HedgePath& path, const JumpForecast& forecast,
                      const PolicyConfig& cfg) {
    if (cfg.freeze_horizon < 0)
        throw std::invalid_argument(
            "policy config: freeze_horizon must be >= 0");
    if (!(cfg.max_step > 0.0))
        throw std::invalid_argument("policy config: max_step must be > 0");
    const std::size_t n = path.size();
    for (const auto& event : forecast.events)
        if (event.index >= n)
            throw std::invalid_argument(
                "forecast event index " + std::to_string(event.index) +
                " outside hedge path of length " + std::to_string(n));

    HedgePath shaped = path;
    if (n == 0) return shaped;

    if (cfg.policy == ShapingPolicy::freeze) {
        // Anchoring each span at the already-shaped previous sample keeps
        // overlapping spans constant as one merged span.
        for (const auto& event : forecast.events) {
            const std::size_t k = event.index;
            const double held = k > 0 ? shaped.delta[k - 1] : shaped.delta[0];
            const std::size_t end = std::min(
                n - 1, k + static_cast<std::size_t>(cfg.freeze_horizon));
            for (std::size_t j = k; j <= end; ++j) shaped.delta[j] = held;
        }
    } else {
        for (std::size_t k = 1; k < n; ++k) {
            const double want = path.delta[k] - shaped.delta[k - 1];
            if (want > cfg.max_step)
                shaped.delta[k] = shaped.delta[k - 1] + cfg.max_step;
            else if (want < -cfg.max_step)
                shaped.delta[k] = shaped.delta[k - 1] - cfg.max_step;
            else
                shaped.delta[k] = path.delta[k];  // limiter inactive: exact
        }
    }
    return shaped;
}

} // namespace trendhedge
