#pragma once

#include <cstddef>
#include <filesystem>
#include <vector>

#include "trendhedge/series.hpp"

namespace trendhedge {

/// Per-sample annualized risk-free rate, aligned with the hedged series.
/// Negative rates are permitted.
struct RatePath {
    std::vector<double> rates;
    double dt_years = kTradingDayDt;

    std::size_t size() const noexcept { return rates.size(); }
};

/// Constant rate path of length n.
RatePath constant_rate(double rate, std::size_t n,
                       double dt_years = kTradingDayDt);

/// Riskless growth factor exp(sum of rates[0..k-1] * dt): the cumulative
/// cash-account value at sample k (left-rectangle quadrature; k = 0 gives
/// exactly 1). Throws std::out_of_range for k >= size.
double growth_factor(const RatePath& path, std::size_t k);

/// growth_factor at every sample, computed from one running rate sum so it
/// agrees bitwise with the scalar form.
std::vector<double> growth_factors(const RatePath& path);

/// pi0 * growth_factor(path, k): the tracking target for a portfolio that
/// started at pi0 and grows at the risk-free rate.
double target_value(const RatePath& path, double pi0, std::size_t k);

/// Loads a rate path from CSV (same schema as the price CSV; values are
/// annualized rates and may be negative or zero).
RatePath load_rate_csv(const std::filesystem::path& path,
                       double default_dt_years = kTradingDayDt);

} // namespace trendhedge
