#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace trendhedge {

/// Sampling interval of one trading day, in years.
inline constexpr double kTradingDayDt = 1.0 / 252.0;

/// Calendar date, used as row metadata in CSV files. Sampling is uniform by
/// construction; calendar gaps between rows carry no meaning.
struct Date {
    int year = 2020;
    int month = 1;
    int day = 1;

    friend auto operator<=>(const Date&, const Date&) = default;
};

/// Formats as YYYY-MM-DD.
std::string to_string(const Date& d);

/// Parses YYYY-MM-DD; returns false on malformed or non-existent dates.
bool parse_date(std::string_view text, Date& out);

/// The date `days` calendar days after `d`.
Date plus_days(const Date& d, long days);

/// Uniformly sampled, strictly positive price observations of one
/// instrument (an underlying or a derivative).
struct PriceSeries {
    std::string label;
    Date t0;
    double dt_years = kTradingDayDt;
    std::vector<double> values;

    std::size_t size() const noexcept { return values.size(); }
};

/// Recipe for a deterministic synthetic price series: geometric-Brownian
/// steps plus multiplicative jumps, driven by the SplitMix64 stream.
struct SynthSpec {
    std::size_t n = 252;
    double s0 = 100.0;
    double drift = 0.0;           ///< annualized
    double vol = 0.0;             ///< annualized
    std::vector<std::pair<std::size_t, double>> jumps; ///< (index, relative size)
    std::uint64_t seed = 0;
};

/**
 * Loads a price series from CSV.
 *
 * Schema: optional `#` comment lines before the header (including
 * `# dt_years=<decimal>` and `# label=<text>`), then the header
 * `date,value`, then rows `YYYY-MM-DD,<decimal>`. Values must be positive
 * and dates strictly increasing. `default_dt_years` applies when the file
 * carries no `# dt_years=` line.
 *
 * Throws IoError if the file cannot be opened and ParseError (naming the
 * offending line) on malformed content.
 */
PriceSeries load_csv(const std::filesystem::path& path,
                     double default_dt_years = kTradingDayDt);

/// Writes the CSV form of `series`: label/dt_years comment lines, the
/// `date,value` header, then one row per sample with consecutive calendar
/// dates starting at t0. LF line endings; values round-trip exactly.
void write_csv(const PriceSeries& series, const std::filesystem::path& path);

/**
 * Generates a synthetic series from `spec`.
 *
 * values[0] = s0; step k multiplies by
 * exp((drift - vol^2/2) dt + vol sqrt(dt) z_k) with z_k standard normal
 * from SplitMix64(seed), then by (1 + size) for each jump listed at k.
 * Identical spec yields a bit-identical series.
 *
 * Throws std::invalid_argument when the spec violates its invariants
 * (n >= 2, s0 > 0, vol >= 0, jump indices in [1, n-1], sizes > -1).
 */
PriceSeries generate(const SynthSpec& spec,
                     double dt_years = kTradingDayDt,
                     std::string_view label = "synthetic");

} // namespace trendhedge
