#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace trendhedge {

struct LineSeries {
    std::string name;
    std::vector<double> y;
};

/// Minimal dependency-free line chart: fixed 800x400 viewBox, auto-scaled
/// axes, one polyline per series, legend from the series names. The x axis
/// is the 0-based sample index. Output is byte-deterministic.
void write_line_svg(const std::filesystem::path& path,
                    const std::string& title,
                    const std::vector<LineSeries>& series);

} // namespace trendhedge
