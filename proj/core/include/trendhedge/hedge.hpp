#pragma once

#include <cstddef>
#include <vector>

#include "trendhedge/rates.hpp"
#include "trendhedge/series.hpp"
#include "trendhedge/trend.hpp"

namespace trendhedge {

/// Initial hedge ratio and trend-portfolio value. pi0 always satisfies
/// pi0 = V_trend(0) - delta0 * S_trend(0) for the inputs that produced it.
struct HedgeInit {
    double delta0 = 0.0;
    double pi0 = 0.0;
};

/// Annualized holding-cost rate for the cost-of-carry variant.
struct CarryParams {
    double q = 0.0;
};

/// Per-sample hedge ratio plus the riskless tracking target it follows.
struct HedgePath {
    std::vector<double> delta;
    std::vector<double> target;
    HedgeInit init;

    std::size_t size() const noexcept { return delta.size(); }
};

/// Raw-price tracking error of a hedge path, with summary statistics.
struct ReplicationReport {
    std::vector<double> error;  ///< (v_raw - delta * s_raw) - target
    double max_abs_error = 0.0;
    double rms_error = 0.0;
    double terminal_error = 0.0;
};

/**
 * Initial conditions of the tracking strategy, from matching the
 * logarithmic derivatives of the hedged portfolio and the cash account
 * at t = 0:
 *
 *   delta0 = (V'_trend(0) - r0 V_trend(0)) / (S'_trend(0) - r0 S_trend(0))
 *   pi0    = V_trend(0) - delta0 S_trend(0)
 *
 * Throws SingularInitialization when the denominator is smaller than a
 * relative tolerance of 1e-9: the underlying's trend then grows at exactly
 * the risk-free rate and delta0 is indeterminate.
 */
HedgeInit init_hedge(const TrendEstimate& v, const TrendEstimate& s,
                     double r0);

/**
 * The risk-free tracking hedge ratio at every sample:
 *
 *   delta[k] = (V_trend[k] - pi0 e^{int r}) / S_trend[k]
 *
 * target[k] holds pi0 e^{int r}. By construction the path satisfies
 * V_trend - delta S_trend = target identically.
 *
 * Throws Error on length mismatch (the message names both lengths) and
 * DegenerateUnderlying when S_trend is non-positive or numerically zero
 * anywhere.
 */
HedgePath delta_path(const TrendEstimate& v, const TrendEstimate& s,
                     const RatePath& r, const HedgeInit& init);

/**
 * Cost-of-carry variant, where holding the underlying costs q S dt:
 *
 *   delta[k] = (V'_trend[k] - r[k] pi0 e^{int r})
 *            / (S'_trend[k] - q S_trend[k])
 *
 * The initialization is the plain init_hedge one, unaltered. Throws
 * SingularCarryDenominator at the first sample whose denominator vanishes.
 */
HedgePath delta_path_carry(const TrendEstimate& v, const TrendEstimate& s,
                           const RatePath& r, const HedgeInit& init,
                           const CarryParams& carry);

/// Tracking error of `path` measured on raw prices rather than trends:
/// how well the riskless replication survives the quick fluctuations.
ReplicationReport replication_report(const PriceSeries& v_raw,
                                     const PriceSeries& s_raw,
                                     const HedgePath& path);

enum class OptionKind { call, put };

/// Black-Scholes delta baseline: N(d1) for calls, N(d1) - 1 for puts, with
/// d1 = (ln(spot/strike) + (rate + vol^2/2) tau) / (vol sqrt(tau)) and
/// N(x) = erfc(-x / sqrt(2)) / 2. Kept for comparison runs only; nothing
/// in the tracking strategy depends on it.
double bsm_delta(double spot, double strike, double vol, double rate,
                 double tau, OptionKind kind);

} // namespace trendhedge
