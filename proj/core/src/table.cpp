#include "trendhedge/table.hpp"

#include <charconv>
#include <fstream>
#include <system_error>

#include "trendhedge/errors.hpp"

namespace trendhedge {

std::string format_double(double x) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, ptr);
}

std::size_t Table::column_index(std::string_view name) const {
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == name) return i;
    throw Error("table has no column '" + std::string(name) + "'");
}

std::vector<double> Table::numeric_column(std::string_view name) const {
    const std::size_t idx = column_index(name);
    std::vector<double> out;
    out.reserve(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const std::string& cell = rows[r][idx];
        double value = 0.0;
        auto [ptr, ec] =
            std::from_chars(cell.data(), cell.data() + cell.size(), value);
        if (ec != std::errc{} || ptr != cell.data() + cell.size())
            throw ParseError("row " + std::to_string(r + 2) + ", column '" +
                             std::string(name) + "': not a number: '" + cell +
                             "'");
        out.push_back(value);
    }
    return out;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            cells.push_back(line.substr(start));
            return cells;
        }
        cells.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

} // namespace

Table read_table(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());

    Table table;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto cells = split_csv_line(line);
        if (lineno == 1) {
            table.header = std::move(cells);
            continue;
        }
        if (cells.size() != table.header.size())
            throw ParseError(path.string() + ":" + std::to_string(lineno) +
                             ": expected " +
                             std::to_string(table.header.size()) +
                             " cells, got " + std::to_string(cells.size()));
        table.rows.push_back(std::move(cells));
    }
    if (table.header.empty())
        throw ParseError(path.string() + ": missing header line");
    return table;
}

void write_table(const Table& table, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    for (std::size_t i = 0; i < table.header.size(); ++i) {
        if (i) out << ',';
        out << table.header[i];
    }
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ',';
            out << row[i];
        }
        out << '\n';
    }
    if (!out) throw IoError("write failed for " + path.string());
}

} // namespace trendhedge
