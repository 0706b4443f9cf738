#include "trendhedge/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "trendhedge/errors.hpp"

namespace trendhedge {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 400.0;
constexpr double kLeft = 60.0;
constexpr double kRight = 780.0;
constexpr double kTop = 30.0;
constexpr double kBottom = 370.0;

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c",
                                "#9467bd", "#ff7f0e", "#8c564b"};

std::string coord(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string axis_label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

} // namespace

void write_line_svg(const std::filesystem::path& path,
                    const std::string& title,
                    const std::vector<LineSeries>& series) {
    std::size_t n = 0;
    double lo = 0.0, hi = 0.0;
    bool any = false;
    for (const auto& s : series) {
        n = std::max(n, s.y.size());
        for (double v : s.y) {
            if (!any) {
                lo = hi = v;
                any = true;
            } else {
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
        }
    }
    if (hi <= lo) hi = lo + 1.0;  // flat data still gets a visible line

    const double x_span = n > 1 ? static_cast<double>(n - 1) : 1.0;
    auto x_of = [&](std::size_t i) {
        return kLeft + (kRight - kLeft) * static_cast<double>(i) / x_span;
    };
    auto y_of = [&](double v) {
        return kBottom - (kBottom - kTop) * (v - lo) / (hi - lo);
    };

    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 "
        << coord(kWidth) << ' ' << coord(kHeight) << "\">\n";
    out << "<rect x=\"0\" y=\"0\" width=\"" << coord(kWidth) << "\" height=\""
        << coord(kHeight) << "\" fill=\"white\"/>\n";
    out << "<text x=\"" << coord(kLeft) << "\" y=\"20\" font-size=\"14\">"
        << title << "</text>\n";

    // axes with min/max labels
    out << "<line x1=\"" << coord(kLeft) << "\" y1=\"" << coord(kTop)
        << "\" x2=\"" << coord(kLeft) << "\" y2=\"" << coord(kBottom)
        << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << coord(kLeft) << "\" y1=\"" << coord(kBottom)
        << "\" x2=\"" << coord(kRight) << "\" y2=\"" << coord(kBottom)
        << "\" stroke=\"black\"/>\n";
    out << "<text x=\"4\" y=\"" << coord(kTop + 4)
        << "\" font-size=\"10\">" << axis_label(hi) << "</text>\n";
    out << "<text x=\"4\" y=\"" << coord(kBottom)
        << "\" font-size=\"10\">" << axis_label(lo) << "</text>\n";
    out << "<text x=\"" << coord(kRight - 20) << "\" y=\""
        << coord(kBottom + 14) << "\" font-size=\"10\">"
        << (n > 0 ? n - 1 : 0) << "</text>\n";

    for (std::size_t si = 0; si < series.size(); ++si) {
        const auto& s = series[si];
        const char* color = kPalette[si % (sizeof kPalette / sizeof *kPalette)];
        out << "<polyline fill=\"none\" stroke=\"" << color
            << "\" stroke-width=\"1\" points=\"";
        for (std::size_t i = 0; i < s.y.size(); ++i) {
            if (i) out << ' ';
            out << coord(x_of(i)) << ',' << coord(y_of(s.y[i]));
        }
        out << "\"/>\n";
        // legend entry
        const double ly = kTop + 14.0 * static_cast<double>(si);
        out << "<line x1=\"" << coord(kLeft + 10) << "\" y1=\"" << coord(ly)
            << "\" x2=\"" << coord(kLeft + 30) << "\" y2=\"" << coord(ly)
            << "\" stroke=\"" << color << "\"/>\n";
        out << "<text x=\"" << coord(kLeft + 36) << "\" y=\"" << coord(ly + 4)
            << "\" font-size=\"11\">" << s.name << "</text>\n";
    }
    out << "</svg>\n";
    if (!out) throw IoError("write failed for " + path.string());
}

} // namespace trendhedge
