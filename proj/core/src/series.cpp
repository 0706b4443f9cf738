#include "trendhedge/series.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "csv_common.hpp"
#include "trendhedge/errors.hpp"
#include "trendhedge/rng.hpp"

namespace trendhedge {

namespace {

std::chrono::year_month_day to_ymd(const Date& d) {
    return std::chrono::year{d.year} / d.month / d.day;
}

} // namespace

std::string to_string(const Date& d) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", d.year, d.month, d.day);
    return buf;
}

bool parse_date(std::string_view text, Date& out) {
    if (text.size() != 10 || text[4] != '-' || text[7] != '-') return false;
    int y = 0, m = 0, day = 0;
    for (int i : {0, 1, 2, 3}) {
        if (text[i] < '0' || text[i] > '9') return false;
        y = y * 10 + (text[i] - '0');
    }
    for (int i : {5, 6}) {
        if (text[i] < '0' || text[i] > '9') return false;
        m = m * 10 + (text[i] - '0');
    }
    for (int i : {8, 9}) {
        if (text[i] < '0' || text[i] > '9') return false;
        day = day * 10 + (text[i] - '0');
    }
    const Date d{y, m, day};
    if (!to_ymd(d).ok()) return false;
    out = d;
    return true;
}

Date plus_days(const Date& d, long days) {
    const auto sd = std::chrono::sys_days{to_ymd(d)} + std::chrono::days{days};
    const std::chrono::year_month_day ymd{sd};
    return Date{int(ymd.year()), int(unsigned(ymd.month())),
                int(unsigned(ymd.day()))};
}

PriceSeries load_csv(const std::filesystem::path& path,
                     double default_dt_years) {
    if (default_dt_years <= 0.0)
        throw std::invalid_argument("default_dt_years must be positive");
    auto parsed = detail::parse_series_csv(path, /*require_positive=*/true,
                                           "price");
    PriceSeries s;
    s.label = std::move(parsed.label);
    s.t0 = parsed.t0;
    s.dt_years = parsed.dt_years.value_or(default_dt_years);
    s.values = std::move(parsed.values);
    return s;
}

void write_csv(const PriceSeries& series, const std::filesystem::path& path) {
    detail::emit_series_csv(path, series.label, series.t0, series.dt_years,
                            series.values);
}

PriceSeries generate(const SynthSpec& spec, double dt_years,
                     std::string_view label) {
    if (spec.n < 2) throw std::invalid_argument("synth spec: n must be >= 2");
    if (!(spec.s0 > 0.0))
        throw std::invalid_argument("synth spec: s0 must be positive");
    if (!(spec.vol >= 0.0))
        throw std::invalid_argument("synth spec: vol must be >= 0");
    if (dt_years <= 0.0)
        throw std::invalid_argument("synth spec: dt_years must be positive");
    for (const auto& [index, size] : spec.jumps) {
        if (index < 1 || index >= spec.n)
            throw std::invalid_argument(
                "synth spec: jump index " + std::to_string(index) +
                " outside [1, n-1]");
        if (!(size > -1.0))
            throw std::invalid_argument(
                "synth spec: jump size must exceed -1");
    }

    // Multiplicative jump factor per step; repeated indices compound.
    std::vector<double> jump_factor(spec.n, 1.0);
    for (const auto& [index, size] : spec.jumps) jump_factor[index] *= 1.0 + size;

    SplitMix64 rng(spec.seed);
    const double step_drift =
        (spec.drift - 0.5 * spec.vol * spec.vol) * dt_years;
    const double step_vol = spec.vol * std::sqrt(dt_years);

    PriceSeries out;
    out.label = std::string(label);
    out.dt_years = dt_years;
    out.values.reserve(spec.n);
    out.values.push_back(spec.s0);
    double s = spec.s0;
    for (std::size_t k = 1; k < spec.n; ++k) {
        const double z = rng.next_normal();
        s *= std::exp(step_drift + step_vol * z);
        s *= jump_factor[k];
        out.values.push_back(s);
    }
    return out;
}

} // namespace trendhedge
