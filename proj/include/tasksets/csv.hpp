#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tasksets::csv {

// Shortest round-trip formatting, deterministic across runs.
std::string format_double(double v);

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    int column(const std::string& name) const; // -1 when absent
};

// Minimal reader for the files this tool writes itself: comma separated, no
// quoting. Throws IoError / MalformedRecord.
Table read_file(const std::string& path);
Table read_string(const std::string& text);

double to_double(const std::string& cell); // throws MalformedRecord on garbage

} // namespace tasksets::csv
