#pragma once

#include <cstddef>
#include <vector>

#include "trendhedge/hedge.hpp"
#include "trendhedge/series.hpp"
#include "trendhedge/trend.hpp"

namespace trendhedge {

/// Trigger rule for flagging unusual fluctuations around the trend.
struct JumpConfig {
    int stat_window = 20;      ///< samples in the rolling residual scale
    double z_threshold = 3.0;  ///< trigger level in residual-scale units
    int direction_window = 5;  ///< samples voting on the direction
    int refractory = 10;       ///< samples during which re-triggering is off
};

enum class JumpDirection { upward, downward };

struct JumpEvent {
    std::size_t index = 0;
    JumpDirection direction = JumpDirection::upward;
    double score = 0.0;  ///< |residual| / rolling scale at the trigger
};

/// Predicted abrupt changes, ordered by index; consecutive events are
/// separated by more than the refractory span.
struct JumpForecast {
    std::vector<JumpEvent> events;
};

/// How to soften the hedge path around predicted jumps.
enum class ShapingPolicy { freeze, rate_limit };

struct PolicyConfig {
    ShapingPolicy policy = ShapingPolicy::rate_limit;
    int freeze_horizon = 10;  ///< samples held after each event (freeze)
    double max_step = 0.05;   ///< per-sample |delta change| cap (rate_limit)
};

/**
 * Flags samples whose residual is unusually large against its own recent
 * history. The scale sigma[k] is the root-mean-square of the residual over
 * the stat_window samples strictly before k (floored at 1e-12 of the
 * running price maximum, which keeps the rule causal); an event fires when
 * |residual[k]| / sigma[k] >= z_threshold outside the refractory span of
 * the previous event. Direction is the sign of the mean residual over the
 * direction_window ending at k.
 *
 * Events fire at detection time; no lead time is claimed.
 */
JumpForecast forecast_jumps(const PriceSeries& series,
                            const TrendEstimate& trend,
                            const JumpConfig& cfg = {});

/**
 * Replaces the exact tracking path with a less violent one.
 *
 * freeze: after each event at k the ratio is held at its last value for
 * samples k .. k+freeze_horizon, then resumes the input path.
 *
 * rate_limit: a global slew limiter,
 * out[k] = out[k-1] + clamp(in[k] - out[k-1], +-max_step); the forecast
 * does not alter the limiter, it only marks where jumps were called.
 *
 * target and init are copied through unchanged, so the shaped path can be
 * compared against the riskless reference it abandoned.
 */
HedgePath shape_delta(const HedgePath& path, const JumpForecast& forecast,
                      const PolicyConfig& cfg = {});

} // namespace trendhedge
