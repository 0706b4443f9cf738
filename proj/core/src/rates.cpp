#include "trendhedge/rates.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "csv_common.hpp"
#include "trendhedge/errors.hpp"

namespace trendhedge {

RatePath constant_rate(double rate, std::size_t n, double dt_years) {
    if (n == 0) throw std::invalid_argument("rate path must be non-empty");
    if (dt_years <= 0.0)
        throw std::invalid_argument("dt_years must be positive");
    return RatePath{std::vector<double>(n, rate), dt_years};
}

double growth_factor(const RatePath& path, std::size_t k) {
    if (k >= path.size())
        throw std::out_of_range("growth_factor: index " + std::to_string(k) +
                                " out of range (size " +
                                std::to_string(path.size()) + ")");
    double sum = 0.0;
    for (std::size_t j = 0; j < k; ++j) sum += path.rates[j] * path.dt_years;
    return std::exp(sum);
}

std::vector<double> growth_factors(const RatePath& path) {
    std::vector<double> out(path.size());
    double sum = 0.0;
    for (std::size_t k = 0; k < path.size(); ++k) {
        out[k] = std::exp(sum);
        sum += path.rates[k] * path.dt_years;
    }
    return out;
}

double target_value(const RatePath& path, double pi0, std::size_t k) {
    return pi0 * growth_factor(path, k);
}

RatePath load_rate_csv(const std::filesystem::path& path,
                       double default_dt_years) {
    if (default_dt_years <= 0.0)
        throw std::invalid_argument("default_dt_years must be positive");
    auto parsed = detail::parse_series_csv(path, /*require_positive=*/false,
                                           "rate");
    return RatePath{std::move(parsed.values),
                    parsed.dt_years.value_or(default_dt_years)};
}

} // namespace trendhedge
