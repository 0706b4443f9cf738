#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "trendhedge/series.hpp"

namespace trendhedge::detail {

struct ParsedSeriesCsv {
    std::string label;
    Date t0;
    std::optional<double> dt_years;
    std::vector<double> values;
};

/// Parses the `date,value` CSV schema shared by price and rate files.
/// `require_positive` enforces the price-series positivity rule;
/// `value_name` appears in error messages ("price" or "rate").
ParsedSeriesCsv parse_series_csv(const std::filesystem::path& path,
                                 bool require_positive,
                                 const char* value_name);

/// Emits the shared schema: comment lines, header, date/value rows.
void emit_series_csv(const std::filesystem::path& path,
                     const std::string& label, const Date& t0,
                     double dt_years, const std::vector<double>& values);

} // namespace trendhedge::detail
