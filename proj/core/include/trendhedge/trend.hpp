#pragma once

#include <cstddef>
#include <vector>

#include "trendhedge/series.hpp"

namespace trendhedge {

/// Configuration of the causal sliding-window polynomial smoother.
struct TrendConfig {
    int window = 20;     ///< samples per fit once warmed up
    int degree = 2;      ///< polynomial degree (0, 1 or 2; 0 = moving average)
    int min_points = 5;  ///< smallest fit accepted near the series start
};

/// Trend / quick-fluctuation decomposition of one series.
/// trend[k] + residual[k] == raw[k] for every k; deriv is per year.
struct TrendEstimate {
    std::vector<double> trend;
    std::vector<double> deriv;
    std::vector<double> residual;

    std::size_t size() const noexcept { return trend.size(); }
};

/**
 * Decomposes `series` into trend and quick fluctuations and estimates the
 * trend's first derivative.
 *
 * At index k a degree-`degree` polynomial is fitted by unweighted least
 * squares to the most recent min(window, k+1) samples (causal: indices
 * <= k only), provided at least min_points are available; earlier indices
 * reuse the polynomial fitted to the first min_points samples, evaluated
 * at their own position. trend[k] is the fitted value at k, deriv[k] the
 * fitted slope converted to per-year units, residual[k] = raw[k] - trend[k].
 *
 * Fits use normal equations on an abscissa scaled to [-1, 0] across the
 * window, which keeps conditioning bounded for the small windows and low
 * degrees supported here.
 *
 * Throws std::invalid_argument on a bad config and Error when the series
 * is shorter than min_points.
 */
TrendEstimate estimate_trend(const PriceSeries& series,
                             const TrendConfig& cfg = {});

} // namespace trendhedge
