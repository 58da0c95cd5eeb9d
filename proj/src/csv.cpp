#include "tasksets/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "tasksets/errors.hpp"

namespace tasksets::csv {

std::string format_double(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

int Table::column(const std::string& name) const {
    for (size_t i = 0; i < header.size(); ++i)
        if (header[i] == name) return static_cast<int>(i);
    return -1;
}

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> out;
    size_t start = 0;
    while (true) {
        size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            out.push_back(line.substr(start));
            break;
        }
        out.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    return out;
}

Table read_stream(std::istream& in) {
    Table t;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto cells = split_line(line);
        if (t.header.empty()) {
            t.header = std::move(cells);
            continue;
        }
        if (cells.size() != t.header.size())
            throw MalformedRecord(line_no, "csv row width differs from header");
        t.rows.push_back(std::move(cells));
    }
    if (t.header.empty()) throw MalformedRecord(0, "empty csv");
    return t;
}

} // namespace

Table read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    return read_stream(in);
}

Table read_string(const std::string& text) {
    std::istringstream in(text);
    return read_stream(in);
}

double to_double(const std::string& cell) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (ec != std::errc() || ptr != cell.data() + cell.size())
        throw MalformedRecord(0, "not a number: " + cell);
    return v;
}

} // namespace tasksets::csv
