#include "csv_common.hpp"

#include <charconv>
#include <fstream>
#include <string_view>

#include "trendhedge/errors.hpp"
#include "trendhedge/table.hpp"

namespace trendhedge::detail {

namespace {

[[noreturn]] void fail(const std::filesystem::path& path, std::size_t line,
                       const std::string& what) {
    throw ParseError(path.string() + ":" + std::to_string(line) + ": " + what);
}

bool parse_full_double(std::string_view text, double& out) {
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}

void strip_cr(std::string& line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
}

} // namespace

ParsedSeriesCsv parse_series_csv(const std::filesystem::path& path,
                                 bool require_positive,
                                 const char* value_name) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());

    ParsedSeriesCsv out;
    std::string line;
    std::size_t lineno = 0;
    bool have_header = false;
    Date prev_date;

    while (std::getline(in, line)) {
        ++lineno;
        strip_cr(line);
        if (!have_header && line.starts_with('#')) {
            std::string_view body{line};
            body.remove_prefix(1);
            if (body.starts_with(' ')) body.remove_prefix(1);
            if (body.starts_with("dt_years=")) {
                double dt = 0.0;
                if (!parse_full_double(body.substr(9), dt) || dt <= 0.0)
                    fail(path, lineno, "invalid dt_years comment");
                out.dt_years = dt;
            } else if (body.starts_with("label=")) {
                out.label = std::string(body.substr(6));
            }
            continue;
        }
        if (!have_header) {
            if (line != "date,value")
                fail(path, lineno, "expected header 'date,value'");
            have_header = true;
            continue;
        }

        const auto comma = line.find(',');
        if (comma == std::string::npos)
            fail(path, lineno, "malformed row (missing comma)");

        Date date;
        if (!parse_date(std::string_view(line).substr(0, comma), date))
            fail(path, lineno, "malformed date '" + line.substr(0, comma) + "'");

        double value = 0.0;
        const std::string_view value_text =
            std::string_view(line).substr(comma + 1);
        if (!parse_full_double(value_text, value))
            fail(path, lineno,
                 std::string("malformed ") + value_name + " '" +
                     std::string(value_text) + "'");
        if (require_positive && value <= 0.0)
            fail(path, lineno,
                 std::string("non-positive ") + value_name + " " +
                     std::string(value_text));

        if (out.values.empty()) {
            out.t0 = date;
        } else if (!(prev_date < date)) {
            fail(path, lineno, "non-monotonic date " + to_string(date));
        }
        prev_date = date;
        out.values.push_back(value);
    }

    if (!have_header)
        throw ParseError(path.string() + ": missing 'date,value' header");
    if (out.values.empty())
        throw ParseError(path.string() + ": empty series");
    return out;
}

void emit_series_csv(const std::filesystem::path& path,
                     const std::string& label, const Date& t0,
                     double dt_years, const std::vector<double>& values) {
    std::ofstream outf(path, std::ios::binary);
    if (!outf) throw IoError("cannot write " + path.string());
    if (!label.empty()) outf << "# label=" << label << '\n';
    outf << "# dt_years=" << format_double(dt_years) << '\n';
    outf << "date,value\n";
    for (std::size_t k = 0; k < values.size(); ++k) {
        outf << to_string(plus_days(t0, static_cast<long>(k))) << ','
             << format_double(values[k]) << '\n';
    }
    if (!outf) throw IoError("write failed for " + path.string());
}

} // namespace trendhedge::detail
