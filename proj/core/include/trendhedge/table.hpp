#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace trendhedge {

/// Shortest decimal form of x that parses back to exactly x.
std::string format_double(double x);

/// Generic column-oriented CSV report: a header line plus uniform rows.
/// Used for every emitted report file so they all load back the same way.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::size_t column_index(std::string_view name) const;  // throws Error
    std::vector<double> numeric_column(std::string_view name) const;
};

Table read_table(const std::filesystem::path& path);

/// Writes with LF endings and no quoting; cells must not contain commas.
void write_table(const Table& table, const std::filesystem::path& path);

} // namespace trendhedge
