#include "trendhedge/hedge.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "trendhedge/errors.hpp"

namespace trendhedge {

namespace {

constexpr double kRelTol = 1e-9;

// Relative-scaled singularity tolerance for a denominator that is a
// difference of the two given like-sized terms.
double denominator_tolerance(double term_a, double term_b) {
    return kRelTol * std::max({1.0, std::abs(term_a), std::abs(term_b)});
}

void check_aligned(std::size_t v_len, std::size_t s_len, std::size_t r_len) {
    if (v_len != s_len || v_len != r_len)
        throw Error("length mismatch: option trend has " +
                    std::to_string(v_len) + " samples, underlying trend " +
                    std::to_string(s_len) + ", rate path " +
                    std::to_string(r_len));
}

} // namespace

HedgeInit init_hedge(const TrendEstimate& v, const TrendEstimate& s,
                     double r0) {
    if (v.size() == 0 || s.size() == 0)
        throw std::invalid_argument("init_hedge: empty trend estimate");
    const double num = v.deriv[0] - r0 * v.trend[0];
    const double den = s.deriv[0] - r0 * s.trend[0];
    if (std::abs(den) <= denominator_tolerance(s.deriv[0], r0 * s.trend[0]))
        throw SingularInitialization(
            "singular initialization: the underlying's trend grows at the "
            "risk-free rate at t=0 (S'(0) - r(0) S(0) = " +
            std::to_string(den) + "), delta(0) is indeterminate");
    HedgeInit init;
    init.delta0 = num / den;
    init.pi0 = v.trend[0] - init.delta0 * s.trend[0];
    return init;
}

HedgePath delta_path(const TrendEstimate& v, const TrendEstimate& s,
                     const RatePath& r, const HedgeInit& init) {
    check_aligned(v.size(), s.size(), r.size());
    const std::size_t n = v.size();

    double max_trend = 0.0;
    for (std::size_t k = 0; k < n; ++k)
        max_trend = std::max(max_trend, std::abs(s.trend[k]));
    const double eps_s = kRelTol * max_trend;
    for (std::size_t k = 0; k < n; ++k)
        if (s.trend[k] <= eps_s)
            throw DegenerateUnderlying(
                "degenerate underlying: S_trend[" + std::to_string(k) +
                "] = " + std::to_string(s.trend[k]) +
                " is not meaningfully positive");

    HedgePath path;
    path.init = init;
    path.target = growth_factors(r);
    path.delta.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        path.target[k] *= init.pi0;
        path.delta[k] = (v.trend[k] - path.target[k]) / s.trend[k];
    }
    return path;
}

HedgePath delta_path_carry(const TrendEstimate& v, const TrendEstimate& s,
                           const RatePath& r, const HedgeInit& init,
                           const CarryParams& carry) {
    check_aligned(v.size(), s.size(), r.size());
    const std::size_t n = v.size();

    HedgePath path;
    path.init = init;
    path.target = growth_factors(r);
    path.delta.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double den = s.deriv[k] - carry.q * s.trend[k];
        if (std::abs(den) <=
            denominator_tolerance(s.deriv[k], carry.q * s.trend[k]))
            throw SingularCarryDenominator(
                "singular carry denominator at sample " + std::to_string(k) +
                ": S'_trend - q S_trend = " + std::to_string(den),
                k);
        path.target[k] *= init.pi0;
        path.delta[k] = (v.deriv[k] - r.rates[k] * path.target[k]) / den;
    }
    return path;
}

ReplicationReport replication_report(const PriceSeries& v_raw,
                                     const PriceSeries& s_raw,
                                     const HedgePath& path) {
    if (v_raw.size() != s_raw.size() || v_raw.size() != path.size())
        throw Error("length mismatch: option series has " +
                    std::to_string(v_raw.size()) +
                    " samples, underlying series " +
                    std::to_string(s_raw.size()) + ", hedge path " +
                    std::to_string(path.size()));
    const std::size_t n = path.size();

    ReplicationReport report;
    report.error.resize(n);
    double sum_sq = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double e =
            (v_raw.values[k] - path.delta[k] * s_raw.values[k]) -
            path.target[k];
        report.error[k] = e;
        report.max_abs_error = std::max(report.max_abs_error, std::abs(e));
        sum_sq += e * e;
    }
    report.rms_error = std::sqrt(sum_sq / static_cast<double>(n));
    report.terminal_error = report.error.back();
    return report;
}

double bsm_delta(double spot, double strike, double vol, double rate,
                 double tau, OptionKind kind) {
    if (!(spot > 0.0)) throw std::invalid_argument("bsm_delta: spot <= 0");
    if (!(strike > 0.0)) throw std::invalid_argument("bsm_delta: strike <= 0");
    if (!(vol > 0.0)) throw std::invalid_argument("bsm_delta: vol <= 0");
    if (!(tau > 0.0)) throw std::invalid_argument("bsm_delta: tau <= 0");

    const double d1 = (std::log(spot / strike) +
                       (rate + 0.5 * vol * vol) * tau) /
                      (vol * std::sqrt(tau));
    const double n_d1 = 0.5 * std::erfc(-d1 / std::sqrt(2.0));
    return kind == OptionKind::call ? n_d1 : n_d1 - 1.0;
}

} // namespace trendhedge
